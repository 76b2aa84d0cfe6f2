#pragma once

#include "cindkit/autf2.h"
#include "cindkit/rational.h"
#include "cindkit/smallcanc.h"
#include "cindkit/word.h"

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cindkit {

// --------------------------------------------------------------------------
// Elements. Every ambient-group instance works over one alternative of this
// tagged union; mixing alternatives across instances is a logic error.

// Finitely supported map Z -> H together with a shift, for H wr Z.
// H is Z/q (q = 0 means Z); values are stored normalized and nonzero.
struct WreathElem {
  std::map<long long, long long> support;
  long long shift = 0;
  friend bool operator==(const WreathElem&, const WreathElem&) = default;
};

// Alternating normal form in G * H with both factors cyclic (Z or Z/q).
struct FpLetter {
  bool from_h = false;
  long long value = 0;  // nonzero, normalized mod the factor order
  friend bool operator==(const FpLetter&, const FpLetter&) = default;
};
struct FpWord {
  std::vector<FpLetter> letters;
  friend bool operator==(const FpWord&, const FpWord&) = default;
};

using Element = std::variant<long long, WreathElem, FpWord, Word, Endo>;

bool element_eq(const Element& x, const Element& y);
std::string element_str(const Element& x);

// --------------------------------------------------------------------------
// Subgroup descriptors: decidable (or honestly tri-state) membership.

enum class Tri { No, Yes, Unknown };

class SubgroupDescriptor {
 public:
  struct Trivial {};
  struct Whole {};
  struct IndexInZ {
    long long d = 1;  // dZ <= Z; d = 0 denotes {0}
  };
  // Subgroup of the base group of H wr Z: supported away from `excluded`,
  // with every value divisible by value_modulus (1 = unrestricted).
  struct SupportClosure {
    std::vector<long long> excluded;
    long long value_modulus = 1;
    long long h_modulus = 0;  // ambient H = Z/h_modulus, 0 = Z
  };
  // Kernel of the exponent-sum vector over the named commutator basis
  // letters of the free-product kernel.
  struct ExpSumKernel {
    std::vector<std::pair<long long, long long>> targets;
    long long qg = 0, qh = 0;
  };
  // Normal closure of a symmetrized word set, truncated; membership is
  // certified through Dehn reduction and is Unknown when the set is not
  // certified and the word does not visibly reduce.
  struct ClosureOfWords {
    std::shared_ptr<const SymmetrizedSet> relators;
  };
  using Payload = std::variant<Trivial, Whole, IndexInZ, SupportClosure, ExpSumKernel, ClosureOfWords>;

  SubgroupDescriptor() : payload_(Whole{}) {}
  explicit SubgroupDescriptor(Payload p, bool normal_in_ambient = false)
      : payload_(std::move(p)), normal_in_ambient_(normal_in_ambient) {}

  static SubgroupDescriptor trivial();                    // normal in ambient
  static SubgroupDescriptor whole();                      // Gamma itself
  static SubgroupDescriptor index_in_z(long long d);
  static SubgroupDescriptor support_closure(std::vector<long long> excluded, long long value_gen,
                                            long long h_modulus);
  static SubgroupDescriptor exp_sum_kernel(std::vector<std::pair<long long, long long>> targets,
                                           long long qg, long long qh);
  static SubgroupDescriptor closure_of_words(std::shared_ptr<const SymmetrizedSet> relators);

  Tri contains(const Element& x) const;
  const Payload& payload() const { return payload_; }
  bool normal_in_ambient() const { return normal_in_ambient_; }
  void mark_normal_in_ambient(bool v) { normal_in_ambient_ = v; }
  std::string str() const;

  // Exact intersection where representable (used for kernels of atomic IRS).
  static std::optional<SubgroupDescriptor> intersect(const SubgroupDescriptor& x,
                                                     const SubgroupDescriptor& y);

 private:
  Payload payload_;
  bool normal_in_ambient_ = false;
};

// --------------------------------------------------------------------------
// Ambient instances Gamma <= Delta with left-coset transversals.

class GroupInstance {
 public:
  virtual ~GroupInstance() = default;

  virtual std::string name() const = 0;
  virtual bool index_infinite() const = 0;
  virtual std::optional<long long> transversal_count() const { return std::nullopt; }

  virtual Element identity() const = 0;
  virtual Element mul(const Element& x, const Element& y) const = 0;
  virtual Element inv(const Element& x) const = 0;

  virtual Element transversal(long long i) const = 0;
  virtual bool in_gamma(const Element& x) const = 0;
  virtual long long coset_index(const Element& x) const = 0;

  virtual Element random_delta(std::mt19937& rng) const = 0;
  virtual Element random_gamma(std::mt19937& rng) const = 0;

  virtual Element parse_element(const std::string& text) const = 0;

  // Closed-form chain descriptors (normal closure of the conjugates
  // t_i^-1 gamma0 t_i over i >= k); unsupported instances refuse.
  virtual SubgroupDescriptor chain_subgroup(const Element& gamma0, long long k) const;
  virtual bool chain_witness_verify(const Element& gamma0, long long k, long long j) const;

  struct CosetAction {
    long long rep_index = 0;
    Element gamma;
  };
  CosetAction coset_action(const Element& delta, long long t_index) const;

  Element conj(const Element& t, const Element& g) const;  // t^-1 g t
};

// Gamma = dZ inside Delta = Z, transversal {0, ..., d-1}.
class IntegerChain final : public GroupInstance {
 public:
  explicit IntegerChain(long long d, long long stride = 1);
  std::string name() const override;
  bool index_infinite() const override { return false; }
  std::optional<long long> transversal_count() const override { return d_; }
  Element identity() const override { return 0LL; }
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  Element transversal(long long i) const override;
  bool in_gamma(const Element& x) const override;
  long long coset_index(const Element& x) const override;
  Element random_delta(std::mt19937& rng) const override;
  Element random_gamma(std::mt19937& rng) const override;
  Element parse_element(const std::string& text) const override;
  long long modulus() const { return d_; }
  long long stride() const { return stride_; }

 private:
  long long d_, stride_;
};

// Gamma = Z sitting with infinite index inside an unspecified ambient group
// whose conjugation restricted to Z acts by +-1. Coset data is intentionally
// unavailable; the co-induction value only needs the sign-invariance.
class AmbientInfiniteZ final : public GroupInstance {
 public:
  std::string name() const override { return "intchain:inf"; }
  bool index_infinite() const override { return true; }
  Element identity() const override { return 0LL; }
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  Element transversal(long long i) const override;
  bool in_gamma(const Element&) const override { return true; }
  long long coset_index(const Element& x) const override;
  Element random_delta(std::mt19937& rng) const override;
  Element random_gamma(std::mt19937& rng) const override;
  Element parse_element(const std::string& text) const override;
};

enum class EnumOrder { Std, Alt };  // 0,1,-1,2,-2,...  /  0,-1,1,-2,2,...

long long enum_int(long long i, EnumOrder order);
long long enum_int_index(long long g, EnumOrder order);

// H wr Z with H = Z/q (q = 0 for Z). `shift_stride` scales the ambient shift
// lattice and `gamma_modulus` widens Gamma to shifts divisible by it
// (0 = base group only); the defaults give the plain pair
// Gamma = direct sum <= Delta = H wr Z.
class Wreath final : public GroupInstance {
 public:
  explicit Wreath(long long q, EnumOrder order = EnumOrder::Std, long long shift_stride = 1,
                  long long gamma_modulus = 0);
  std::string name() const override;
  bool index_infinite() const override { return gamma_modulus_ == 0; }
  std::optional<long long> transversal_count() const override;
  Element identity() const override;
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  Element transversal(long long i) const override;
  bool in_gamma(const Element& x) const override;
  long long coset_index(const Element& x) const override;
  Element random_delta(std::mt19937& rng) const override;
  Element random_gamma(std::mt19937& rng) const override;
  Element parse_element(const std::string& text) const override;
  SubgroupDescriptor chain_subgroup(const Element& gamma0, long long k) const override;
  bool chain_witness_verify(const Element& gamma0, long long k, long long j) const override;

  long long h_modulus() const { return q_; }
  EnumOrder order() const { return order_; }
  Element delta_at(long long position, long long value) const;
  long long norm_value(long long v) const;

 private:
  long long q_;
  EnumOrder order_;
  long long stride_, gamma_modulus_;
};

// Kernel of G * H -> G x H with G = Z/qg, H = Z/qh (0 = Z); Gamma is freely
// generated by the commutators [g,h], and T = {gh} in h-major product order.
class FreeProductKernel final : public GroupInstance {
 public:
  FreeProductKernel(long long qg, long long qh, EnumOrder h_order = EnumOrder::Std);
  std::string name() const override;
  bool index_infinite() const override { return qh_ == 0; }
  std::optional<long long> transversal_count() const override;
  Element identity() const override { return FpWord{}; }
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  Element transversal(long long i) const override;
  bool in_gamma(const Element& x) const override;
  long long coset_index(const Element& x) const override;
  Element random_delta(std::mt19937& rng) const override;
  Element random_gamma(std::mt19937& rng) const override;
  Element parse_element(const std::string& text) const override;

  long long qg() const { return qg_; }
  long long qh() const { return qh_; }
  EnumOrder h_order() const { return order_; }
  std::pair<long long, long long> projection(const FpWord& x) const;  // (sum_G, sum_H)
  FpWord normalize(std::vector<FpLetter> letters) const;
  FpWord commutator(long long g, long long h) const;  // [g,h] = g h g^-1 h^-1
  std::pair<long long, long long> transversal_pair(long long i) const;

 private:
  long long qg_, qh_;
  EnumOrder order_;
};

// Commutator-basis words for the free-product kernel.
struct BasisWord {
  std::vector<std::pair<std::pair<long long, long long>, int>> letters;  // ((g,h), +-1)
};
BasisWord schreier_rewrite(const FreeProductKernel& inst, const FpWord& x);
FpWord expand_basis_word(const FreeProductKernel& inst, const BasisWord& w);
long long occurrence_count(const BasisWord& w, std::pair<long long, long long> target);
long long exponent_sum(const BasisWord& w, std::pair<long long, long long> target);
std::string basis_word_str(const BasisWord& w);

// Witness quotient of BS(n,m) = HNN(Z, phi: nZ -> mZ): the construction maps
// it onto (Z/d) wr Z with d = gcd(n,m), where the chain logic is decidable.
// Coprime parameters give a trivial quotient and the chain ops refuse.
class BSWitness final : public GroupInstance {
 public:
  BSWitness(long long n, long long m);
  std::string name() const override;
  bool index_infinite() const override { return true; }
  Element identity() const override;
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  Element transversal(long long i) const override;
  bool in_gamma(const Element& x) const override;
  long long coset_index(const Element& x) const override;
  Element random_delta(std::mt19937& rng) const override;
  Element random_gamma(std::mt19937& rng) const override;
  Element parse_element(const std::string& text) const override;
  SubgroupDescriptor chain_subgroup(const Element& gamma0, long long k) const override;
  bool chain_witness_verify(const Element& gamma0, long long k, long long j) const override;

  long long n() const { return n_; }
  long long m() const { return m_; }
  long long gcd() const { return d_; }
  // <<nZ u mZ>> inside the base Z of the HNN extension.
  SubgroupDescriptor edge_closure() const;
  const Wreath& quotient() const { return quotient_; }

 private:
  long long n_, m_, d_;
  Wreath quotient_;
};

// Inner F_2 inside Aut(F_2), transversal from the sixteen-template coset
// list truncated at composition length L. Delta-elements are endomorphisms
// with provenance; Gamma-elements are the inner automorphisms.
class AutF2Instance final : public GroupInstance {
 public:
  AutF2Instance(int n, int L);
  std::string name() const override;
  bool index_infinite() const override { return true; }
  Element identity() const override;
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  Element transversal(long long i) const override;
  bool in_gamma(const Element& x) const override;
  long long coset_index(const Element& x) const override;
  Element random_delta(std::mt19937& rng) const override;
  Element random_gamma(std::mt19937& rng) const override;
  Element parse_element(const std::string& text) const override;

  int n() const { return n_; }
  int max_len() const { return L_; }
  long long rep_count() const { return static_cast<long long>(reps_.size()); }
  const Endo& rep(long long i) const { return reps_[i]; }
  static Endo ad(const Word& u);  // x -> u x u^-1
  Word gamma_word(const Element& x) const;

  // <<eta(w) : eta over the non-identity reps, index >= k>>, truncated.
  SubgroupDescriptor chain_subgroup(const Element& gamma0, long long k) const override;

 private:
  int n_, L_;
  std::vector<Endo> reps_;
  std::vector<Endo> rep_inverses_;
};

// --------------------------------------------------------------------------

std::shared_ptr<GroupInstance> parse_instance(const std::string& spec);

// Single-level cocycle law rho(d1 d2, t) = rho(d1, sigma(d2,t)) rho(d2,t).
bool cocycle_identity_check(const GroupInstance& inst, int samples, unsigned seed,
                            std::string* failure = nullptr);

// Chain rule for nested Lambda <= Gamma <= Delta, where `outer` presents
// Delta/Gamma and `inner` presents Gamma/Lambda over the same element type.
bool cocycle_chain_check(const GroupInstance& outer, const GroupInstance& inner, int samples,
                         unsigned seed, std::string* failure = nullptr);

}  // namespace cindkit
