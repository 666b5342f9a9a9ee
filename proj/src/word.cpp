#include "hkdim/word.hpp"

#include <cctype>
#include <sstream>

#include "hkdim/errors.hpp"

namespace hkdim {

Word parse_word(const OrientedGraph& g, std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) w.push_back(g.index(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

std::string format_word(const OrientedGraph& g, const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out << ' ';
    out << g.name(w[i]);
  }
  return out.str();
}

IndexSet support(const OrientedGraph& g, const Word& w) {
  IndexSet s(g.vertex_count());
  for (int letter : w) s.add(letter);
  return s;
}

long long count_occurrences(const Word& w, int letter) {
  long long c = 0;
  for (int x : w) c += (x == letter);
  return c;
}

bool deg_lex_less(const Word& a, const Word& b, const VertexOrder& order) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return order.less(a[i], b[i]);
  }
  return false;
}

}  // namespace hkdim
