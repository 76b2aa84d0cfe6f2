#pragma once

#include "cindkit/rational.h"
#include "cindkit/word.h"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cindkit {

struct RelatorOrigin {
  std::size_t source = 0;  // index into the input word list
  bool inverted = false;
};

// Closure of a relator set under inversion and cyclic rotation, stored as
// deduplicated canonical cycle classes in first-appearance order. The
// certified flag records a successful cancellation check at threshold <= 1/6,
// which is what the reduction and certificate routines rely on.
class SymmetrizedSet {
 public:
  static SymmetrizedSet symmetrize(const std::vector<Word>& words);

  const std::vector<CyclicWord>& members() const { return members_; }
  const std::vector<RelatorOrigin>& origins() const { return origins_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const CyclicWord& c) const;
  long long min_length() const;

  bool certified() const { return certified_; }
  void mark_certified(bool value) { certified_ = value; }

 private:
  std::vector<CyclicWord> members_;
  std::vector<RelatorOrigin> origins_;
  bool certified_ = false;
};

struct PieceReport {
  std::size_t x = 0, y = 0;  // member indices, x < y
  long long piece_length = 0;
  Word witness;
  Rational ratio;      // piece_length / min(||x||, ||y||)
  bool pass = true;    // ratio < lambda
};

struct CancellationCheck {
  Rational lambda;
  long long pairs_checked = 0;
  bool pass = true;
  PieceReport worst;  // maximal ratio; ties resolved to the earliest pair
};

// All-pairs piece scan over distinct cycle classes. Marks the set certified
// when it passes at lambda <= 1/6. Self-overlaps within a single class do not
// count as pieces.
CancellationCheck check_small_cancellation(SymmetrizedSet& set, const Rational& lambda,
                                           unsigned jobs = 0);

struct DehnStep {
  Word before;        // rotated cyclic reduction, starts with the match
  std::size_t relator = 0;
  Word matched;       // u, with 2|u| > ||r||
  Word replacement;   // c^-1 where the relator cycle reads u c
  Word after;
};

struct DehnResult {
  Word result;
  std::vector<DehnStep> trace;
  bool reduced_to_identity = false;
  bool heuristic_only = false;  // the relator set was not certified
};

// Greedy Dehn reduction: repeatedly replace the longest cyclic subword that
// covers more than half of some relator cycle by the shorter complement.
// For a certified set an empty result is equivalent to membership in the
// normal closure of the (truncated) relator set.
DehnResult dehn_reduce(const Word& z, const SymmetrizedSet& relators);

// Independent replay of a reduction trace; returns false on the first step
// that is not a valid strictly-more-than-half relator replacement.
bool verify_dehn_trace(const Word& z, const SymmetrizedSet& relators, const DehnResult& result);

struct LengthCertificate {
  long long z_length = 0;
  long long min_relator_length = 0;
};

// Non-membership by length: in a certified C'(1/6) presentation any
// nontrivial cyclically reduced member of the normal closure either lies in
// the symmetrized set or properly contains more than half of a relator, hence
// is longer than the shortest relator. Refuses (nullopt) when inconclusive.
std::optional<LengthCertificate> non_membership_certificate(const Word& z,
                                                            const SymmetrizedSet& relators);

// One word per line, '#' starts a comment, blank lines skipped.
std::vector<Word> parse_relator_lines(std::istream& in, int rank = 2);
std::vector<Word> read_relator_file(const std::string& path, int rank = 2);

}  // namespace cindkit
