#pragma once

#include "cindkit/word.h"

#include <cstdint>
#include <vector>

namespace cindkit {

// Lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation(const std::vector<Letter>& s);

// Suffix automaton over letter codes; alphabet size fixed at construction.
// Built once per left-hand cycle and streamed against many right-hand cycles,
// which is the all-pairs hot path of the small-cancellation check.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(int alphabet);
  void build(const std::vector<Letter>& text);

  // Longest factor of `text` that is also a substring of the built string.
  long long longest_match(const std::vector<Letter>& text) const;

  // End positions in `text` of every maximal-statistic match of length >= want;
  // used to harvest witness candidates.
  struct Match {
    long long end;  // inclusive index into text
    long long len;
  };
  std::vector<Match> matches_of_length(const std::vector<Letter>& text, long long want) const;

 private:
  int alphabet_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> link_;
  std::vector<std::int32_t> len_;
  int last_ = 0;
  int states_ = 0;

  int new_state();
  void extend(Letter c);
};

// Max common substring length of two cycles given as canonical letter strings,
// window capped at min(|x|,|y|).
long long common_cycle_length(const std::vector<Letter>& x, const std::vector<Letter>& y, int alphabet);

// Same, but also produces the lexicographically least witness of that length.
std::vector<Letter> common_cycle_witness(const std::vector<Letter>& x, const std::vector<Letter>& y,
                                         int alphabet, long long len);

}  // namespace cindkit
