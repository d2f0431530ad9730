#pragma once

#include <iosfwd>
#include <string>

#include "abcd/graph.hpp"

namespace abcd {

// Whitespace- or comma-separated "u v [weight]" lines; '%' and '#' start
// comments; missing weight means +1. Lines of the form "%v <label>" declare a
// vertex without edges (used by the canonical writer for round trips).
RawEdgeList load_konect(const std::string& path);
RawEdgeList load_konect(std::istream& in, const std::string& name);

// "user,item,rating[,timestamp]" lines. Ratings 4 and 5 map to +1, 3 maps to
// +1 (unsigned treated positive), 1 and 2 map to -1. User and item labels are
// kept in disjoint namespaces. Malformed or out-of-range rows are rejected and
// counted in rejected_records.
RawEdgeList load_amazon_ratings(const std::string& path);
RawEdgeList load_amazon_ratings(std::istream& in, const std::string& name);

// Balanced core of n_core vertices (random side split; intra-side edges
// positive, cross-side negative, density p_core) plus n_noise vertices wired
// into any pair they touch with density p_noise and random signs. Fully
// deterministic for a fixed seed.
RawEdgeList generate_planted(int64_t n_core, int64_t n_noise, double p_core, double p_noise,
                             double neg_noise_fraction, uint64_t seed);

// Canonical text form: one "%v <label>" line per vertex in id order, then one
// "label_u label_v sign" line per edge. load_konect reads it back verbatim.
void write_canonical(const SignedGraph& g, std::ostream& out);
void write_canonical(const SignedGraph& g, const std::string& path);

}  // namespace abcd
