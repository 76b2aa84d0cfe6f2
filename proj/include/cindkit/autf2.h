#pragma once

#include "cindkit/word.h"

#include <optional>
#include <string>
#include <vector>

namespace cindkit {

// Generator symbols for endomorphism provenance. Provenance is written
// leftmost-applied-last: {phi, tau} denotes phi o tau, so tau acts first.
// The two inverse symbols only arise from Endo::inverse().
enum class AutSym { Phi, Psi, Chi, Xi, Tau, PhiInv, PsiInv };

const char* aut_sym_name(AutSym s);

// Endomorphism of F_2 given by generator images, with optional provenance
// over the named symbols. All provided constructions are automorphisms.
class Endo {
 public:
  Endo();  // identity
  Endo(Word image_a, Word image_b, std::vector<AutSym> provenance = {});

  const Word& image_a() const { return image_a_; }
  const Word& image_b() const { return image_b_; }
  const std::vector<AutSym>& provenance() const { return prov_; }

  Word apply(const Word& x) const;
  Endo inverse() const;  // needs provenance
  std::string provenance_str() const;

  // equality is extensional: same generator images
  friend bool operator==(const Endo& f, const Endo& g) {
    return f.image_a_ == g.image_a_ && f.image_b_ == g.image_b_;
  }

 private:
  Word image_a_, image_b_;
  std::vector<AutSym> prov_;
};

Endo elementary(AutSym s);
Endo aut_phi();
Endo aut_psi();
Endo aut_chi();
Endo aut_xi();
Endo aut_tau();
Endo compose(const Endo& f, const Endo& g);  // f o g, g applied first
Endo parse_provenance(const std::string& text);

inline long long growth(const Endo& f) { return f.image_a().length() + f.image_b().length(); }

// Positive monoid generated by phi and psi, truncated at composition length L,
// enumerated length-first then lexicographically with phi < psi. Includes the
// identity, so the count is 2^(L+1) - 1.
std::vector<Endo> enumerate_frplus(int max_len);

// Coset representatives of Aut(F_2) over the inner subgroup, truncated to
// Fr+ factors of length <= L. Sixteen template shapes; the sigma-shapes skip
// the identity factor.
std::vector<Endo> transversal_R(int max_len);

enum class FrClass { Identity, APhi0, APsi0, A1 };
const char* fr_class_name(FrClass c);

struct Classification {
  FrClass cls;
  bool leftmost_phi = false;  // member of A_phi (leftmost symbol phi)
  bool leftmost_psi = false;
};

// Classifies a member of the truncated positive monoid by its provenance.
Classification classify(const Endo& f);

// If f is conjugation x -> u x u^-1, returns u.
std::optional<Word> inner_word(const Endo& f);

}  // namespace cindkit
