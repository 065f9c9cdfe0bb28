#pragma once

#include <string>
#include <string_view>

#include "qpart/bijections.hpp"
#include "qpart/partition.hpp"
#include "qpart/profile_word.hpp"
#include "qpart/two_color.hpp"

namespace qpart {

// Canonical text forms. Parsers reject malformed input with
// std::invalid_argument.
//
//   partition          "12+8+6+4+3+1",    empty: "0"
//   two-color          "12g+8g+6r+4r+3g+1r", empty: "0"
//   profile word       "xzxyxzyyz",       empty: ""
//   triple             "(4; 3+1; 3+3+2+2+1+1+1+1)", empty components blank
//   partition pair     "pi=8+6+4+2 sigma=8+4+2"

std::string to_text(const Partition& p);
std::string to_text(const TwoColorPartition& p);
std::string to_text(const ProfileWord& w);
std::string to_text(const TripleDecomposition& t);
std::string to_text(const PartitionPair& pr);

Partition parse_partition(std::string_view s);
TwoColorPartition parse_two_color(std::string_view s);
ProfileWord parse_word(std::string_view s);
TripleDecomposition parse_triple(std::string_view s);
PartitionPair parse_pair(std::string_view s);

// JSON forms, e.g. {"parts":[12,8,6,4,3,1]} for partitions,
// {"parts":[[12,"g"],[8,"g"]]} for two-color partitions, and
// {"d":4,"pi":[3,1],"sigma":[3,3,2,2,1,1,1,1]} for triples.
std::string to_json(const Partition& p);
std::string to_json(const TwoColorPartition& p);
std::string to_json(const ProfileWord& w);
std::string to_json(const TripleDecomposition& t);
std::string to_json(const PartitionPair& pr);

} // namespace qpart
