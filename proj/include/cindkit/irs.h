#pragma once

#include "cindkit/groups.h"
#include "cindkit/rational.h"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cindkit {

// Exact value, or a certified enclosure when an infinite tail can only be
// bounded. Printed "p/q" or "[p/q, r/s]".
struct CertifiedValue {
  enum class Kind { Exact, ExactZero, Interval };
  Kind kind = Kind::Exact;
  Rational lo, hi;

  static CertifiedValue exact(Rational v);
  static CertifiedValue zero();
  static CertifiedValue interval(Rational lo, Rational hi);
  std::string str() const;
  bool definitely_equal(const CertifiedValue& o) const;
  bool definitely_distinct(const CertifiedValue& o) const;
};

// Finitely supported IRS on subgroups of Gamma: positive weights summing to
// one, each on a subgroup that is normal in Gamma.
struct IrsAtom {
  Rational weight;
  SubgroupDescriptor subgroup;
};

class AtomicIRS {
 public:
  explicit AtomicIRS(std::vector<IrsAtom> atoms);
  static AtomicIRS dirac(SubgroupDescriptor d);
  const std::vector<IrsAtom>& atoms() const { return atoms_; }
  std::string str() const;

 private:
  std::vector<IrsAtom> atoms_;
};

// theta(N_F) for finite F; throws when an atom's membership is undecidable.
Rational eval_basic(const AtomicIRS& theta, const std::vector<Element>& F);
bool kernel_contains(const AtomicIRS& theta, const Element& gamma);

// The transversal-indexed factor sequence theta(N_{t^-1 F t}), split into
// finitely many exceptional values and a classified tail.
struct FactorTail {
  enum class Kind { AllOne, ConstantBelowOne, SummableDeficit };
  std::vector<std::pair<long long, Rational>> exceptional;
  Kind kind = Kind::AllOne;
  Rational param;  // the constant c < 1, or the summable deficit bound
  std::string note;
};

CertifiedValue product_over_tail(const FactorTail& tail);

FactorTail classify_factors(const GroupInstance& inst, const AtomicIRS& theta,
                            const std::vector<Element>& F);

CertifiedValue coinduce_value(const GroupInstance& inst, const AtomicIRS& theta,
                              const std::vector<Element>& F);

// Dyadic chain measures over the closed-form chain subgroups.
AtomicIRS chain_theta(const GroupInstance& inst, const Element& gamma0, long long K);
// First two weights deformed to a and 3/4 - a; the rest dyadic.
AtomicIRS chain_theta_a(const GroupInstance& inst, const Element& gamma0, const Rational& a,
                        long long K);

// The untruncated chain, handled in closed form on the wreath instances.
struct IdealChainTheta {
  Element gamma0;
};
Rational ideal_chain_eval(const GroupInstance& inst, const IdealChainTheta& theta,
                          const std::vector<Element>& F);
CertifiedValue ideal_chain_coinduce(const GroupInstance& inst, const IdealChainTheta& theta,
                                    const std::vector<Element>& F, long long window);

struct Theta {
  enum class Kind { Atomic, IdealChain };
  Kind kind = Kind::Atomic;
  std::optional<AtomicIRS> atoms;
  std::optional<IdealChainTheta> chain;
  long long window = 12;
  std::string spec;
};

Theta parse_theta(const std::string& spec, const GroupInstance& inst);
Rational theta_eval(const GroupInstance& inst, const Theta& theta, const std::vector<Element>& F);
CertifiedValue theta_coinduce(const GroupInstance& inst, const Theta& theta,
                              const std::vector<Element>& F);

struct NonatomicityVerdict {
  enum class Kind { NonAtomic, DiracAtom, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::string witness;  // element, when NonAtomic
  std::string atom;     // subgroup, when DiracAtom
  std::string reason;
};

NonatomicityVerdict nonatomicity_verdict(const GroupInstance& inst, const Theta& theta,
                                         const std::optional<Element>& candidate);

// Pushforward along an elementwise epimorphism witness.
struct HomWitness {
  std::string name;
  std::function<Element(const Element&)> map;
};
Rational pushforward_value(const HomWitness& f, const AtomicIRS& theta,
                           const std::vector<Element>& F);

// Mixtures lambda delta_Gamma + (1-lambda) delta_{Lambda*} on the
// free-product kernel, and the four-parameter weak-mixing refinement.
AtomicIRS freeprod_lambda_theta(const FreeProductKernel& inst, const Rational& lambda,
                                bool weakmix);

struct DistinguishRow {
  Rational param;
  CertifiedValue value;
};
struct DistinguishResult {
  std::string family;
  std::vector<DistinguishRow> rows;
  bool pairwise_distinct = false;
};
DistinguishResult distinguish_family(const GroupInstance& inst, const std::vector<Rational>& params,
                                     bool weakmix, long long K);

}  // namespace cindkit
