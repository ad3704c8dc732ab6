#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qknot {

// A letter of the free group F(a,b): +1 = a, -1 = a^-1, +2 = b, -2 = b^-1.
using Letter = std::int8_t;

inline constexpr Letter kA = 1;
inline constexpr Letter kAInv = -1;
inline constexpr Letter kB = 2;
inline constexpr Letter kBInv = -2;

// Freely reduced word in a, b. The empty word is the identity.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters); // reduces on construction

  static Word parse(const std::string& text); // throws SyntaxError

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  friend Word concat(const Word& u, const Word& v);
  Word& operator*=(Letter l); // append one letter, reducing

  // Canonical caret syntax, e.g. "ba^-1b^-1a"; identity prints as "1".
  std::string str() const;

  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const { return letters_ < o.letters_; }

private:
  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);

// Two-generator presentation, either |a,b : w| or |a,b : w1 = w2|.
struct Presentation {
  Word lhs;
  Word rhs; // empty and balanced==false => plain relator lhs
  bool balanced = false;
  std::string label;

  static Presentation relator(Word w, std::string label = "");
  static Presentation equation(Word w1, Word w2, std::string label = "");

  // lhs * rhs^-1, freely reduced.
  Word full_relator() const { return concat(lhs, rhs.inverse()); }

  std::string str() const;
};

// Parses "w" or "w1 = w2". Throws SyntaxError / EmptyWordError.
Presentation parse_presentation(const std::string& text);

// Standard 2-bridge knot presentation b(p,q): a v = v b with
// v = b^e1 a^e2 b^e3 ... (p-1 letters), e_i = (-1)^floor(i q / p).
// Requires p odd, p > 1, 0 < q < p, gcd(p,q) = 1; throws ArgumentError.
Presentation two_bridge(long p, long q);

} // namespace qknot
