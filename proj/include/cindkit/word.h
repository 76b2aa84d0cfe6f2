#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cindkit {

// Letter codes pack generator index and sign: 2*gen for a positive letter,
// 2*gen+1 for its inverse. Numeric order on codes is the tie-break order used
// everywhere (generator index ascending, positive before negative).
using Letter = std::uint8_t;

inline Letter letter_code(int gen, bool negative) {
  return static_cast<Letter>(2 * gen + (negative ? 1 : 0));
}
inline Letter letter_inverse(Letter c) { return c ^ 1; }
inline int letter_gen(Letter c) { return c >> 1; }
inline bool letter_negative(Letter c) { return c & 1; }

struct Run {
  int gen = 0;
  long long exp = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

// Freely reduced word in F_rank, stored as runs of a single generator.
// Construction normalizes, so adjacent runs always have distinct generators
// and no run has exponent zero.
class Word {
 public:
  explicit Word(int rank = 2) : rank_(rank) {}
  Word(int rank, std::vector<Run> runs);

  static Word parse(const std::string& text, int rank = 2);
  static Word from_letters(const std::vector<Letter>& ls, int rank = 2);
  static Word generator_power(int gen, long long exp, int rank = 2);

  int rank() const { return rank_; }
  const std::vector<Run>& runs() const { return runs_; }
  bool is_identity() const { return runs_.empty(); }
  long long length() const;  // |x|, number of letters
  std::vector<Letter> letters() const;

  Word inverse() const;
  Word pow(long long k) const;
  std::string str() const;

  friend Word operator*(const Word& x, const Word& y);  // freely reduced concat
  friend bool operator==(const Word&, const Word&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Word& w);

 private:
  int rank_;
  std::vector<Run> runs_;
};

Word conjugate(const Word& u, const Word& x);  // u^-1 x u

// Sign pattern of one generator's occurrences across a word.
enum class SignProfile { AllPositive, AllNegative, Mixed, Absent };
SignProfile sign_profile(const Word& x, int gen);
const char* sign_profile_name(SignProfile p);

// Replaces every letter by the positive letter of its generator. The result
// is reported as a raw (unreduced) run sequence, since e.g. a^-1 a flattens
// to a^2 rather than cancelling.
std::vector<Run> flatten_signs(const Word& x);

// Cyclically reduced word in canonical rotation (lexicographically least
// rotation in letter-code order).
class CyclicWord {
 public:
  CyclicWord() : base_(2) {}
  explicit CyclicWord(const Word& x);  // cyclically reduces, then rotates

  const Word& base() const { return base_; }
  int rank() const { return base_.rank(); }
  long long length() const { return base_.length(); }  // ||x||
  bool is_identity() const { return base_.is_identity(); }
  std::vector<Letter> letters() const { return base_.letters(); }
  CyclicWord inverse() const { return CyclicWord(base_.inverse()); }
  std::string str() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend bool operator<(const CyclicWord& x, const CyclicWord& y);

 private:
  Word base_;
};

inline CyclicWord cyclic_canonical(const Word& x) { return CyclicWord(x); }
inline long long cyclic_length(const Word& x) { return CyclicWord(x).length(); }

struct CommonSubstring {
  long long length = 0;
  Word witness;  // lexicographically least among maximum-length matches
};

// Longest string occurring as a contiguous substring of both cycles, scanned
// with wraparound and window capped at each cycle's length. Rejects equal
// inputs: a piece is only defined between distinct relator cycles.
CommonSubstring max_common_cyclic_substring(const CyclicWord& x, const CyclicWord& y);

}  // namespace cindkit
