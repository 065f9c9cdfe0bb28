#include "qpart/text.hpp"

#include <charconv>
#include <stdexcept>

namespace qpart {

namespace {

int parse_int(std::string_view s)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("expected an integer, got \"" + std::string(s) + "\"");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

} // namespace

std::string to_text(const Partition& p)
{
    if (p.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += "+";
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string to_text(const TwoColorPartition& p)
{
    if (p.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += "+";
        out += std::to_string(p.parts()[i].value);
        out += static_cast<char>(p.parts()[i].color);
    }
    return out;
}

std::string to_text(const ProfileWord& w)
{
    std::string out;
    out.reserve(w.size());
    for (Letter l : w)
        out += static_cast<char>(l);
    return out;
}

std::string to_text(const TripleDecomposition& t)
{
    std::string pi = t.pi.empty() ? "" : to_text(t.pi);
    std::string sigma = t.sigma.empty() ? "" : to_text(t.sigma);
    return "(" + std::to_string(t.d) + "; " + pi + "; " + sigma + ")";
}

std::string to_text(const PartitionPair& pr)
{
    return "pi=" + to_text(pr.pi) + " sigma=" + to_text(pr.sigma);
}

Partition parse_partition(std::string_view s)
{
    s = trim(s);
    if (s == "0")
        return {};
    if (s.empty())
        throw std::invalid_argument("empty partition text (the empty partition is \"0\")");
    std::vector<int> parts;
    for (auto piece : split(s, '+'))
        parts.push_back(parse_int(trim(piece)));
    return Partition(std::move(parts));
}

TwoColorPartition parse_two_color(std::string_view s)
{
    s = trim(s);
    if (s == "0")
        return {};
    if (s.empty())
        throw std::invalid_argument("empty two-color text (the empty partition is \"0\")");
    std::vector<ColoredPart> parts;
    for (auto piece : split(s, '+')) {
        piece = trim(piece);
        if (piece.size() < 2)
            throw std::invalid_argument("malformed colored part \"" + std::string(piece) + "\"");
        const char tag = piece.back();
        if (tag != 'r' && tag != 'g')
            throw std::invalid_argument("colored part must end in r or g, got \""
                                        + std::string(piece) + "\"");
        parts.push_back({parse_int(piece.substr(0, piece.size() - 1)),
                         tag == 'r' ? Color::red : Color::green});
    }
    return TwoColorPartition(std::move(parts));
}

ProfileWord parse_word(std::string_view s)
{
    s = trim(s);
    ProfileWord w;
    w.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case 'x': w.push_back(Letter::x); break;
        case 'y': w.push_back(Letter::y); break;
        case 'z': w.push_back(Letter::z); break;
        default:
            throw std::invalid_argument(std::string("word letter must be x, y, or z, got '")
                                        + c + "'");
        }
    }
    return w;
}

TripleDecomposition parse_triple(std::string_view s)
{
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("triple must be parenthesized: (d; pi; sigma)");
    const auto pieces = split(s.substr(1, s.size() - 2), ';');
    if (pieces.size() != 3)
        throw std::invalid_argument("triple must have three ;-separated components");
    TripleDecomposition t;
    t.d = parse_int(trim(pieces[0]));
    const auto part = [](std::string_view piece) {
        piece = trim(piece);
        return piece.empty() ? Partition{} : parse_partition(piece);
    };
    t.pi = part(pieces[1]);
    t.sigma = part(pieces[2]);
    return t;
}

PartitionPair parse_pair(std::string_view s)
{
    s = trim(s);
    constexpr std::string_view pi_tag = "pi=";
    constexpr std::string_view sigma_tag = "sigma=";
    if (s.substr(0, pi_tag.size()) != pi_tag)
        throw std::invalid_argument("pair must look like \"pi=... sigma=...\"");
    const std::size_t sep = s.find(' ');
    if (sep == std::string_view::npos
        || s.substr(sep + 1, sigma_tag.size()) != sigma_tag)
        throw std::invalid_argument("pair must look like \"pi=... sigma=...\"");
    PartitionPair pr;
    pr.pi = parse_partition(s.substr(pi_tag.size(), sep - pi_tag.size()));
    pr.sigma = parse_partition(s.substr(sep + 1 + sigma_tag.size()));
    return pr;
}

namespace {

std::string json_int_list(const std::vector<int>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

} // namespace

std::string to_json(const Partition& p)
{
    return "{\"parts\":" + json_int_list(p.parts()) + "}";
}

std::string to_json(const TwoColorPartition& p)
{
    std::string out = "{\"parts\":[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += ",";
        out += "[" + std::to_string(p.parts()[i].value) + ",\"";
        out += static_cast<char>(p.parts()[i].color);
        out += "\"]";
    }
    return out + "]}";
}

std::string to_json(const ProfileWord& w)
{
    return "{\"letters\":\"" + to_text(w) + "\"}";
}

std::string to_json(const TripleDecomposition& t)
{
    return "{\"d\":" + std::to_string(t.d)
         + ",\"pi\":" + json_int_list(t.pi.parts())
         + ",\"sigma\":" + json_int_list(t.sigma.parts()) + "}";
}

std::string to_json(const PartitionPair& pr)
{
    return "{\"pi\":" + json_int_list(pr.pi.parts())
         + ",\"sigma\":" + json_int_list(pr.sigma.parts()) + "}";
}

} // namespace qpart
