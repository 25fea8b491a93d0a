#ifndef ZETAKIRCH_COVERING_HPP
#define ZETAKIRCH_COVERING_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zetakirch/graph.hpp"
#include "zetakirch/matrix.hpp"
#include "zetakirch/poly.hpp"

namespace zetakirch {

using Cplx = std::complex<double>;

/// Finite group given by its multiplication table; the axioms are verified
/// at construction.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }

 private:
  int order_;
  std::vector<std::vector<int>> table_;
  int identity_;
  std::vector<int> inverse_;
};

/// One irreducible representation; `rat` is filled on the exact path,
/// `num` always mirrors it in doubles.
struct Representation {
  int degree;
  bool exact;
  std::vector<Matrix<Rational>> rat;
  std::vector<Matrix<Cplx>> num;
};

struct IrrepSet {
  bool exact;  // true iff every representation is exact
  std::vector<Representation> reps;  // trivial representation first
};

struct GroupData {
  FiniteGroup group;
  IrrepSet irreps;
  std::vector<std::string> element_tokens;
  std::string name;
};

/// Built-in groups: Z<r> (r >= 2), Z2^<k> (k <= 3), S3.
/// Z2 and Z2^k and S3 come with exact rational irreps; Z<r> for r >= 3 uses
/// roots of unity on the numeric path.
GroupData builtin_group(const std::string& spec);

/// Validates homomorphism, identity image, sum of squared degrees and
/// character orthogonality; throws ValidationError on failure.
void validate_irreps(const FiniteGroup& group, const IrrepSet& irreps, double tol = 1e-9);

/// Force the numeric path for an exact irrep set (for cross-checks).
IrrepSet as_numeric(const IrrepSet& irreps);

/// alpha on arcs, alpha(e^-1) = alpha(e)^-1; stored on forward arcs.
struct VoltageAssignment {
  std::vector<int> forward;  // group element per base edge (arc from the smaller endpoint)
  int on_arc(const FiniteGroup& group, int arc) const {
    return (arc & 1) ? group.inverse(forward[arc >> 1]) : forward[arc >> 1];
  }
};

struct VoltageFile {
  std::string group_token;
  std::vector<std::string> element_tokens;
};
VoltageFile parse_vlt(std::string_view text);

VoltageAssignment resolve_voltages(const WeightedGraph& g, const GroupData& gd,
                                   const std::vector<std::string>& tokens);

/// The derived |Gamma|-fold cover: vertices V(G) x Gamma, edge (u,h)-(v, h alpha)
/// per base arc, lifted weights. Throws SimplicityError / DisconnectedCoverError.
WeightedGraph derived_graph(const WeightedGraph& g, const FiniteGroup& group,
                            const VoltageAssignment& alpha);

/// sum_g rho(g) (x) W_g; the left (representation) factor indexes blocks.
Matrix<Rational> twisted_matrix(const WeightedGraph& g, const FiniteGroup& group,
                                const VoltageAssignment& alpha, const Representation& rep);
Matrix<Cplx> twisted_matrix_numeric(const WeightedGraph& g, const FiniteGroup& group,
                                    const VoltageAssignment& alpha,
                                    const Representation& rep);

/// K_i(u,t) = det(I - t T_i + (1-u) t^2 I_{f_i} (x) (D_w - (1-u) I_n)), exact path.
BiPoly K_i_poly(const WeightedGraph& g, const FiniteGroup& group,
                const VoltageAssignment& alpha, const Representation& rep);

/// Point evaluation of K_i for complex representations (and as a
/// double-precision cross-check for exact ones).
Cplx K_i_eval(const WeightedGraph& g, const FiniteGroup& group,
              const VoltageAssignment& alpha, const Representation& rep,
              const Rational& u, const Rational& t);

struct NumericConfig {
  std::uint64_t seed = 20240915;
  int samples = 7;
  double tol = 1e-9;
};

struct Theorem14Result {
  bool exact;
  bool ok;
  std::string detail;
};
Theorem14Result verify_theorem14(const WeightedGraph& g, const GroupData& gd,
                                 const VoltageAssignment& alpha,
                                 const NumericConfig& cfg = {},
                                 const Rational& rhs_offset = Rational(0));

struct Theorem15Result {
  bool exact;
  bool ok;
  Rational direct;          // kappa of the cover
  Rational formula_exact;   // exact path value
  double formula_numeric;   // numeric path value
};
Theorem15Result verify_theorem15(const WeightedGraph& g, const GroupData& gd,
                                 const VoltageAssignment& alpha,
                                 const NumericConfig& cfg = {},
                                 const Rational& rhs_offset = Rational(0));

struct Theorem16Result {
  bool exact;
  bool variant1, variant2, variant3;
  bool corollary2_consistent;  // t = 1 specialization, exact path only
  bool ok;
  LaurentPoly cover_kfz_poly;  // Kf^z of the cover as a polynomial in t
};
Theorem16Result verify_theorem16(const WeightedGraph& g, const GroupData& gd,
                                 const VoltageAssignment& alpha,
                                 const NumericConfig& cfg = {},
                                 const Rational& rhs_offset = Rational(0));

struct Corollary3Result {
  bool exact;
  bool ok;
  Rational lhs;  // Kf^z of the cover
  Rational rhs;  // exact-path value (numeric path compares doubles)
};
Corollary3Result verify_corollary3(const WeightedGraph& g, const GroupData& gd,
                                   const VoltageAssignment& alpha,
                                   const NumericConfig& cfg = {},
                                   const Rational& rhs_offset = Rational(0));

}  // namespace zetakirch

#endif
