#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hkdim/graph.hpp"
#include "hkdim/order.hpp"

namespace hkdim {

/// A word over the generators: a sequence of vertex ids. The empty word is
/// the monoid identity.
using Word = std::vector<int>;

/// Parses whitespace-separated vertex names; the empty string is the
/// identity. Throws Error on unknown names.
Word parse_word(const OrientedGraph& g, std::string_view text);

/// Names joined by single spaces; the identity prints as the empty string.
std::string format_word(const OrientedGraph& g, const Word& w);

/// Set of distinct letters occurring in w.
IndexSet support(const OrientedGraph& g, const Word& w);

long long count_occurrences(const Word& w, int letter);

/// Deg-lex comparison: length first, then lexicographic by rank.
bool deg_lex_less(const Word& a, const Word& b, const VertexOrder& order);

}  // namespace hkdim
