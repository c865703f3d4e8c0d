// Natural deduction proofs with string labels.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dispnet/aps.hpp"
#include "dispnet/contraction.hpp"
#include "dispnet/formula.hpp"
#include "dispnet/proof_structure.hpp"
#include "dispnet/terms.hpp"

namespace dispnet {

enum class NDRule { Hyp, Dis, UnderE, UnderI, OverE, OverI, ProdE, ProdI, DownE, DownI, UpE, UpI, WrapE, WrapI };

// Premiss order: \E [A, A\C]; /E [C/B, B]; !E [A, A!C]; ^E [C^B, B];
// *I and oI [A, B]; *E and oE [major, minor]; other I rules [subproof].
// Hyp leaves carry the antecedent position in index; Dis leaves carry the
// discharge index and slot (0, or 1 for the B hypothesis of *E and oE).
struct NDProof {
  NDRule rule = NDRule::Hyp;
  Mode mode = Mode::first();
  int index = -1;
  int slot = 0;
  StringTerm term;
  Formula formula;
  std::vector<NDProof> children;
};

NDProof nd_leaf(int k, StringTerm term, Formula f);
NDProof nd_discharged(int i, int slot, StringTerm term, Formula f);

bool is_intro(NDRule r);
bool discharges(NDRule r);
std::string rule_label(NDRule r, Mode m);  // "\E", "^>I", "*E", ...

struct SequentHyp {
  StringTerm term;
  Formula formula;
  friend bool operator==(const SequentHyp&, const SequentHyp&) = default;
};

struct Sequent {
  std::vector<SequentHyp> hypotheses;
  StringTerm term;
  Formula goal;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::string to_string(const Sequent& s);

// Free hypotheses ordered by their antecedent position.
Sequent sequent_of(const NDProof& p);

struct NDViolation {
  std::string path;  // child indices from the root, e.g. "0.1"
  std::string message;
};

std::optional<NDViolation> check_nd(const NDProof& p);

// Equality up to renaming of discharge indices and of the variables of
// discharged hypotheses.
bool same_proof(const NDProof& a, const NDProof& b);
NDProof canonical(const NDProof& p);

// ---- serialization ----
class NDSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProofFile {
  Signature signature;
  NDProof proof;
};

std::string to_sexpr(const NDProof& p);
std::string proof_file_text(const Signature& sig, const NDProof& p);
NDProof parse_sexpr(std::string_view text, const Signature& sig);
ProofFile parse_proof_file(std::string_view text);
std::string latex(const NDProof& p);

// ---- proof nets ----
struct NetOfND {
  ProofStructure structure;
  std::vector<HypLabel> labels;
  Formula goal;
  Trace trace;
  int logical_rules = 0;  // rules that add a par link
};

NetOfND net_of_nd(const NDProof& p);

class ExtractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

NDProof extract_nd(const ProofStructure& ps, const std::vector<HypLabel>& labels, const Formula& goal);

// ---- oracle ----
// Cut-free sequent search for the Lambek calculus with empty antecedents.
bool lambek_derivable(const std::vector<Formula>& antecedent, const Formula& goal);

}  // namespace dispnet
