#include "cindkit/cyclic_match.h"

#include <algorithm>
#include <stdexcept>

namespace cindkit {

std::size_t least_rotation(const std::vector<Letter>& s) {
  std::size_t n = s.size();
  if (n <= 1) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
      if (i == j) ++i;
    } else {
      j += k + 1;
      if (j == i) ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

SuffixAutomaton::SuffixAutomaton(int alphabet) : alphabet_(alphabet) {}

int SuffixAutomaton::new_state() {
  next_.insert(next_.end(), alphabet_, -1);
  link_.push_back(-1);
  len_.push_back(0);
  return states_++;
}

void SuffixAutomaton::extend(Letter c) {
  int cur = new_state();
  len_[cur] = len_[last_] + 1;
  int p = last_;
  while (p != -1 && next_[static_cast<std::size_t>(p) * alphabet_ + c] == -1) {
    next_[static_cast<std::size_t>(p) * alphabet_ + c] = cur;
    p = link_[p];
  }
  if (p == -1) {
    link_[cur] = 0;
  } else {
    int q = next_[static_cast<std::size_t>(p) * alphabet_ + c];
    if (len_[p] + 1 == len_[q]) {
      link_[cur] = q;
    } else {
      int clone = new_state();
      len_[clone] = len_[p] + 1;
      link_[clone] = link_[q];
      for (int a = 0; a < alphabet_; ++a)
        next_[static_cast<std::size_t>(clone) * alphabet_ + a] =
            next_[static_cast<std::size_t>(q) * alphabet_ + a];
      while (p != -1 && next_[static_cast<std::size_t>(p) * alphabet_ + c] == q) {
        next_[static_cast<std::size_t>(p) * alphabet_ + c] = clone;
        p = link_[p];
      }
      link_[q] = clone;
      link_[cur] = clone;
    }
  }
  last_ = cur;
}

void SuffixAutomaton::build(const std::vector<Letter>& text) {
  next_.clear();
  link_.clear();
  len_.clear();
  states_ = 0;
  next_.reserve((2 * text.size() + 2) * alphabet_);
  link_.reserve(2 * text.size() + 2);
  len_.reserve(2 * text.size() + 2);
  new_state();
  last_ = 0;
  for (Letter c : text) {
    if (c >= alphabet_) throw std::invalid_argument("letter outside alphabet");
    extend(c);
  }
}

long long SuffixAutomaton::longest_match(const std::vector<Letter>& text) const {
  long long best = 0, l = 0;
  int cur = 0;
  for (Letter c : text) {
    while (cur != 0 && next_[static_cast<std::size_t>(cur) * alphabet_ + c] == -1) {
      cur = link_[cur];
      l = len_[cur];
    }
    int to = next_[static_cast<std::size_t>(cur) * alphabet_ + c];
    if (to == -1) {
      cur = 0;
      l = 0;
    } else {
      cur = to;
      ++l;
    }
    if (l > best) best = l;
  }
  return best;
}

std::vector<SuffixAutomaton::Match> SuffixAutomaton::matches_of_length(
    const std::vector<Letter>& text, long long want) const {
  std::vector<Match> out;
  long long l = 0;
  int cur = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    Letter c = text[i];
    while (cur != 0 && next_[static_cast<std::size_t>(cur) * alphabet_ + c] == -1) {
      cur = link_[cur];
      l = len_[cur];
    }
    int to = next_[static_cast<std::size_t>(cur) * alphabet_ + c];
    if (to == -1) {
      cur = 0;
      l = 0;
    } else {
      cur = to;
      ++l;
    }
    if (l >= want) out.push_back({static_cast<long long>(i), l});
  }
  return out;
}

namespace {

std::vector<Letter> doubled(const std::vector<Letter>& s) {
  std::vector<Letter> d;
  d.reserve(2 * s.size());
  d.insert(d.end(), s.begin(), s.end());
  d.insert(d.end(), s.begin(), s.end());
  return d;
}

}  // namespace

long long common_cycle_length(const std::vector<Letter>& x, const std::vector<Letter>& y, int alphabet) {
  if (x.empty() || y.empty()) return 0;
  long long cap = static_cast<long long>(std::min(x.size(), y.size()));
  SuffixAutomaton sam(alphabet);
  sam.build(doubled(x));
  long long best = sam.longest_match(doubled(y));
  return std::min(best, cap);
}

std::vector<Letter> common_cycle_witness(const std::vector<Letter>& x, const std::vector<Letter>& y,
                                         int alphabet, long long len) {
  if (len <= 0) return {};
  SuffixAutomaton sam(alphabet);
  sam.build(doubled(x));
  std::vector<Letter> y2 = doubled(y);
  std::vector<Letter> best;
  for (const auto& m : sam.matches_of_length(y2, len)) {
    auto from = y2.begin() + static_cast<std::ptrdiff_t>(m.end - len + 1);
    std::vector<Letter> cand(from, from + static_cast<std::ptrdiff_t>(len));
    if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
      best = std::move(cand);
  }
  if (best.empty()) throw std::logic_error("witness requested for absent match length");
  return best;
}

}  // namespace cindkit
