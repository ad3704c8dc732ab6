#include "qknot/word.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

#include "qknot/errors.hpp"

namespace qknot {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l)
    out.pop_back();
  else
    out.push_back(l);
}

} // namespace

Word::Word(std::vector<Letter> letters) {
  for (Letter l : letters) push_reduced(letters_, l);
}

Word& Word::operator*=(Letter l) {
  push_reduced(letters_, l);
  return *this;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(static_cast<Letter>(-*it));
  return w;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  for (Letter l : v.letters_) push_reduced(w.letters_, l);
  return w;
}

Word Word::parse(const std::string& text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') { // identity
      ++i;
      continue;
    }
    Letter base;
    switch (c) {
      case 'a': base = kA; break;
      case 'b': base = kB; break;
      case 'A': base = kAInv; break;
      case 'B': base = kBInv; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "' in word");
    }
    ++i;
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw SyntaxError("malformed exponent after '^'");
      long mag = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 1000000) throw SyntaxError("exponent out of range");
        ++i;
      }
      exp = neg ? -mag : mag;
    }
    Letter l = exp < 0 ? static_cast<Letter>(-base) : base;
    for (long k = 0; k < std::labs(exp); ++k) w *= l;
  }
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (Letter l : letters_) {
    s += (std::abs(l) == 1) ? 'a' : 'b';
    if (l < 0) s += "^-1";
  }
  return s;
}

Presentation Presentation::relator(Word w, std::string label) {
  Presentation p;
  p.lhs = std::move(w);
  p.balanced = false;
  p.label = std::move(label);
  return p;
}

Presentation Presentation::equation(Word w1, Word w2, std::string label) {
  Presentation p;
  p.lhs = std::move(w1);
  p.rhs = std::move(w2);
  p.balanced = true;
  p.label = std::move(label);
  return p;
}

std::string Presentation::str() const {
  if (balanced) return lhs.str() + " = " + rhs.str();
  return lhs.str();
}

Presentation parse_presentation(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) {
    Word w = Word::parse(text);
    if (w.empty() && text.find_first_not_of(" \t\r\n") == std::string::npos)
      throw EmptyWordError("empty presentation");
    return Presentation::relator(std::move(w));
  }
  if (text.find('=', eq + 1) != std::string::npos)
    throw SyntaxError("more than one '=' in presentation");
  Word w1 = Word::parse(text.substr(0, eq));
  Word w2 = Word::parse(text.substr(eq + 1));
  if (w1.empty() && w2.empty()) throw EmptyWordError("both sides of '=' are empty");
  return Presentation::equation(std::move(w1), std::move(w2));
}

Presentation two_bridge(long p, long q) {
  if (p <= 1) throw ArgumentError("two_bridge: p must be > 1");
  if (p % 2 == 0) throw ArgumentError("two_bridge: p must be odd (knot case)");
  if (q <= 0 || q >= p) throw ArgumentError("two_bridge: need 0 < q < p");
  if (std::gcd(p, q) != 1) throw ArgumentError("two_bridge: gcd(p,q) must be 1");

  // The epsilon word needs the odd representative of q mod 2p; with an even
  // q the raw formula presents a different group (b(p,q) = b(p,q-p)).
  long qn = q % 2 == 0 ? q - p : q;

  Word v;
  for (long i = 1; i < p; ++i) {
    long n = i * qn;
    long fl = n >= 0 ? n / p : -((-n + p - 1) / p); // floor(i q / p)
    bool positive = ((fl % 2) + 2) % 2 == 0;        // e_i = (-1)^fl
    Letter base = (i % 2 == 1) ? kB : kA;           // letters alternate b, a, b, ...
    v *= positive ? base : static_cast<Letter>(-base);
  }
  Word lhs = concat(Word{{kA}}, v);
  Word rhs = concat(v, Word{{kB}});
  return Presentation::equation(std::move(lhs), std::move(rhs),
                                "b(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

} // namespace qknot
