#include "milnor/braid.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace milnor {

BraidWord parse_braid(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  if (i >= text.size() || text[i] != 'B')
    throw BraidError(BraidError::Kind::Syntax, "expected 'B<n>:' header");
  ++i;
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    throw BraidError(BraidError::Kind::Syntax, "expected strand count after 'B'");
  int n = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    n = n * 10 + (text[i++] - '0');
  if (n < 1) throw BraidError(BraidError::Kind::Syntax, "strand count must be >= 1");
  skip_ws();
  if (i >= text.size() || text[i] != ':')
    throw BraidError(BraidError::Kind::Syntax, "expected ':' after strand count");
  ++i;

  BraidWord word;
  word.n = n;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != 's')
      throw BraidError(BraidError::Kind::Syntax,
                       std::string("expected generator 's<i>', got '") + text[i] + "'");
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw BraidError(BraidError::Kind::Syntax, "expected generator index after 's'");
    int idx = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      idx = idx * 10 + (text[i++] - '0');
    int sign = +1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i + 1 < text.size() && text[i] == '-' && text[i + 1] == '1') {
        sign = -1;
        i += 2;
      } else {
        throw BraidError(BraidError::Kind::Syntax, "only '^-1' is accepted after a generator");
      }
    }
    if (idx < 1 || idx > n - 1) {
      std::ostringstream msg;
      msg << "generator s" << idx << " out of range for B" << n;
      throw BraidError(BraidError::Kind::IndexOutOfRange, msg.str());
    }
    word.letters.push_back(sign * idx);
  }
  return word;
}

int exponent_sum(const BraidWord& b) {
  int e = 0;
  for (int letter : b.letters) e += (letter > 0) ? 1 : -1;
  return e;
}

int hirasawa_lambda(const BraidWord& b) { return b.n - exponent_sum(b) + 1; }

int closed_braid_components(const BraidWord& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.n));
  std::iota(perm.begin(), perm.end(), 0);
  // Apply the transpositions in word order; the cycle count is what matters
  // and is the same for either composition convention.
  for (int letter : b.letters) {
    const int k = std::abs(letter) - 1;
    std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k + 1)]);
  }
  std::vector<bool> seen(static_cast<std::size_t>(b.n), false);
  int cycles = 0;
  for (int start = 0; start < b.n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int at = start;
    while (!seen[static_cast<std::size_t>(at)]) {
      seen[static_cast<std::size_t>(at)] = true;
      at = perm[static_cast<std::size_t>(at)];
    }
  }
  return cycles;
}

}  // namespace milnor
