#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cindkit/word.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace cindkit;

namespace {

// Letter-stack free reduction, independent of the run-length representation.
std::vector<Letter> naive_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> st;
  for (Letter c : in) {
    if (!st.empty() && st.back() == letter_inverse(c)) st.pop_back();
    else st.push_back(c);
  }
  return st;
}

std::vector<Letter> naive_inverse(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  for (auto it = in.rbegin(); it != in.rend(); ++it) out.push_back(letter_inverse(*it));
  return out;
}

// Strip cancelling ends, then minimize over rotations in letter-code order.
std::vector<Letter> naive_cyclic(std::vector<Letter> v) {
  v = naive_reduce(v);
  while (v.size() >= 2 && v.front() == letter_inverse(v.back())) {
    v.erase(v.begin());
    v.pop_back();
    v = naive_reduce(v);
  }
  if (v.empty()) return v;
  std::vector<Letter> best = v;
  for (std::size_t r = 1; r < v.size(); ++r) {
    std::vector<Letter> rot(v.begin() + r, v.end());
    rot.insert(rot.end(), v.begin(), v.begin() + r);
    if (rot < best) best = rot;
  }
  return best;
}

std::vector<Letter> rand_letters(std::mt19937& rng, int max_len, int rank = 2) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> code(0, 2 * rank - 1);
  std::vector<Letter> out(len(rng));
  for (Letter& c : out) c = static_cast<Letter>(code(rng));
  return out;
}

// Brute-force longest common substring of two cycles: every rotation start and
// window length up to min(|x|, |y|); witness minimized in letter-code order.
std::pair<long long, std::vector<Letter>> naive_piece(const std::vector<Letter>& x,
                                                      const std::vector<Letter>& y) {
  std::set<std::vector<Letter>> subs;
  long long nx = static_cast<long long>(x.size());
  for (long long s = 0; s < nx; ++s)
    for (long long l = 1; l <= nx; ++l) {
      std::vector<Letter> w;
      for (long long i = 0; i < l; ++i) w.push_back(x[(s + i) % nx]);
      subs.insert(std::move(w));
    }
  long long best = 0;
  std::vector<Letter> witness;
  long long ny = static_cast<long long>(y.size());
  for (long long s = 0; s < ny; ++s)
    for (long long l = 1; l <= std::min(nx, ny); ++l) {
      std::vector<Letter> w;
      for (long long i = 0; i < l; ++i) w.push_back(y[(s + i) % ny]);
      if (subs.count(w)) {
        if (l > best || (l == best && w < witness)) {
          best = l;
          witness = std::move(w);
        }
      }
    }
  return {best, witness};
}

}  // namespace

TEST_CASE("parse and print round trips") {
  CHECK(Word::parse("a b a^2 b^2").str() == "a b a^2 b^2");
  CHECK(Word::parse("a b b^-1 a").str() == "a^2");
  CHECK(Word::parse("1").is_identity());
  CHECK(Word::parse("").is_identity());
  CHECK(Word::parse("a a a").str() == "a^3");
  CHECK(Word::parse("a^-1 a").is_identity());
  CHECK(Word::parse("b^-3").length() == 3);
  CHECK_THROWS_AS(Word::parse("c"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a^"), std::invalid_argument);
  CHECK(Word::parse("x1 x2^-2", 3).length() == 3);
}

TEST_CASE("forced cancellation") {
  CHECK((Word::parse("a b") * Word::parse("b^-1 a")).str() == "a^2");
}

TEST_CASE("conjugate strips to the cycle") {
  Word u = Word::parse("b^-1");
  Word x = Word::parse("a b a^2 b^2");
  CHECK(conjugate(u, x) == Word::parse("b a b a^2 b"));
  CHECK(CyclicWord(conjugate(u, x)) == CyclicWord(x));
}

TEST_CASE("random words match the letter-stack oracles") {
  std::mt19937 rng(11);
  for (int it = 0; it < 10000; ++it) {
    std::vector<Letter> raw = rand_letters(rng, 40);
    Word w = Word::from_letters(raw);
    CHECK(w.letters() == naive_reduce(raw));

    std::vector<Letter> raw2 = rand_letters(rng, 40);
    Word w2 = Word::from_letters(raw2);
    std::vector<Letter> cat = naive_reduce(raw);
    std::vector<Letter> r2 = naive_reduce(raw2);
    cat.insert(cat.end(), r2.begin(), r2.end());
    CHECK((w * w2).letters() == naive_reduce(cat));
    CHECK(w.inverse().letters() == naive_inverse(w.letters()));
    CHECK((w * w.inverse()).is_identity());
    CHECK(CyclicWord(w).letters() == naive_cyclic(raw));
    CHECK(Word::parse(w.str()) == w);
  }
}

TEST_CASE("cyclic canonicalization is rotation invariant") {
  std::mt19937 rng(12);
  for (int it = 0; it < 2000; ++it) {
    Word w = Word::from_letters(rand_letters(rng, 24));
    std::vector<Letter> ls = CyclicWord(w).letters();
    if (ls.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
    std::size_t r = pick(rng);
    std::vector<Letter> rot(ls.begin() + r, ls.end());
    rot.insert(rot.end(), ls.begin(), ls.begin() + r);
    CHECK(CyclicWord(Word::from_letters(rot)) == CyclicWord(w));
  }
}

TEST_CASE("pow matches repeated multiplication") {
  Word w = Word::parse("a b^-1");
  Word acc(2);
  for (int k = 0; k <= 6; ++k) {
    CHECK(w.pow(k) == acc);
    acc = acc * w;
  }
  CHECK(w.pow(-3) == w.inverse().pow(3));
}

TEST_CASE("piece computation matches the brute-force oracle") {
  std::mt19937 rng(13);
  int done = 0;
  while (done < 2000) {
    CyclicWord x(Word::from_letters(rand_letters(rng, 12)));
    CyclicWord y(Word::from_letters(rand_letters(rng, 12)));
    if (x.length() == 0 || y.length() == 0 || x == y) continue;
    ++done;
    auto [len, witness] = naive_piece(x.letters(), y.letters());
    CommonSubstring got = max_common_cyclic_substring(x, y);
    CHECK(got.length == len);
    CHECK(got.witness.letters() == witness);
  }
}

TEST_CASE("piece of a cycle against itself is rejected") {
  CyclicWord x(Word::parse("a b"));
  CHECK_THROWS_AS(max_common_cyclic_substring(x, x), std::invalid_argument);
  CHECK_THROWS_AS(max_common_cyclic_substring(x, CyclicWord(Word::parse("b a"))),
                  std::invalid_argument);
}

TEST_CASE("known piece values") {
  CyclicWord x(Word::parse("a^10 b"));
  CyclicWord y(Word::parse("a^10 b^-1"));
  CommonSubstring got = max_common_cyclic_substring(x, y);
  CHECK(got.length == 10);
  CHECK(got.witness == Word::parse("a^10"));

  // cycle(ab) against cycle(a^-1 b^-1): single-letter overlap only after
  // inversion, which symmetrization supplies; the direct cycles share nothing.
  CyclicWord u(Word::parse("a b"));
  CyclicWord v(Word::parse("a^-1 b^-1"));
  CHECK(max_common_cyclic_substring(u, v).length == 0);
}

TEST_CASE("sign profiles") {
  CHECK(sign_profile(Word::parse("a b a^2"), 0) == SignProfile::AllPositive);
  CHECK(sign_profile(Word::parse("a^-1 b a^-2"), 0) == SignProfile::AllNegative);
  CHECK(sign_profile(Word::parse("a b a^-2"), 0) == SignProfile::Mixed);
  CHECK(sign_profile(Word::parse("b^5"), 0) == SignProfile::Absent);
}
