#ifndef SESLAB_FIELD_HPP
#define SESLAB_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seslab {

// ---------------------------------------------------------------------------
// Polynomials over GF(p).
//
// A polynomial is a coefficient vector indexed by degree (coeffs[i] is the
// coefficient of x^i), kept trimmed: no trailing zeros, zero polynomial = {}.
// ---------------------------------------------------------------------------
using Poly = std::vector<std::uint32_t>;

int poly_degree(const Poly& f);  // -1 for the zero polynomial
Poly poly_trim(Poly f);
Poly poly_add(const Poly& f, const Poly& g, std::uint32_t p);
Poly poly_sub(const Poly& f, const Poly& g, std::uint32_t p);
Poly poly_mul(const Poly& f, const Poly& g, std::uint32_t p);
Poly poly_mod(const Poly& f, const Poly& m, std::uint32_t p);
Poly poly_gcd(Poly f, Poly g, std::uint32_t p);  // monic
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p);
std::string poly_to_string(const Poly& f);

// Monic f of degree >= 1: true iff f has no nontrivial factor, decided by
// gcd(f, x^{p^i} - x mod f) = 1 for all i <= deg(f)/2.
bool is_irreducible(const Poly& f, std::uint32_t p);

// ---------------------------------------------------------------------------
// Field towers GF(p) <= GF(q) <= GF(q^2), polynomial-basis representation.
// ---------------------------------------------------------------------------

// A concrete model of GF(p^k): GF(p)[x]/(modulus).  Specs are interned and
// canonical per (p, k); see make_field.
struct FieldSpec {
  std::uint32_t p = 0;  // characteristic, prime
  std::uint32_t k = 0;  // extension degree over GF(p)
  Poly modulus;         // monic irreducible of degree k, coefficients c0..ck
  std::uint64_t size = 0;             // p^k
  std::uint64_t primitive_value = 0;  // canonical generator of the unit group
                                      // (value encoding; class of x when that
                                      // class is primitive, which holds for
                                      // every canonical modulus with k >= 2)
};

// Canonical field with the least monic irreducible modulus of degree k whose
// class of x is primitive (coefficient tuples ordered as base-p integers).
// Deterministic across runs; the returned reference is interned and permanent.
const FieldSpec& make_field(std::uint32_t p, std::uint32_t k);

class FieldElement {
 public:
  FieldElement() = default;  // null element; using it in arithmetic throws

  static FieldElement zero(const FieldSpec& f);
  static FieldElement one(const FieldSpec& f);
  // Coefficient vector c0..c_{k-1}, entries reduced mod p.
  static FieldElement from_coeffs(const FieldSpec& f, std::vector<std::uint32_t> coeffs);
  // Base-p packed value sum c_i * p^i, the canonical integer encoding.
  static FieldElement from_value(const FieldSpec& f, std::uint64_t value);
  // Class of x (the generator of the polynomial basis).
  static FieldElement generator(const FieldSpec& f);

  const FieldSpec& spec() const;
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  std::uint64_t value() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;  // throws on zero
  FieldElement pow(std::uint64_t e) const;

 private:
  const FieldSpec* spec_ = nullptr;
  std::vector<std::uint32_t> coeffs_;

  void require_same(const FieldElement& o) const;
};

// x^q for x in GF(q^2); applying twice is the identity and the fixed set is
// exactly the GF(q)-subfield.  Requires the field of x to be GF(q^2).
FieldElement frobenius_q(const FieldElement& x, std::uint64_t q);

// Least n >= 1 with x^n = 1; divides p^k - 1.  Requires x != 0.
std::uint64_t multiplicative_order(const FieldElement& x);

// ---------------------------------------------------------------------------
// The embedding GF(q) -> GF(q^2).  The canonical moduli of the two fields are
// unrelated, so the embedding is computed: the image of GF(q)'s x-class is
// the least root of GF(q)'s modulus inside GF(q^2).
// ---------------------------------------------------------------------------
struct SubfieldEmbedding {
  const FieldSpec* sub = nullptr;
  const FieldSpec* sup = nullptr;
  FieldElement generator_image;
  std::vector<FieldElement> basis_images;  // images of 1, x, ..., x^{a-1}

  FieldElement embed(const FieldElement& x) const;
  // Inverse where defined; nullopt when y lies outside the subfield.
  std::optional<FieldElement> project(const FieldElement& y) const;
};

// Interned embedding of the canonical GF(q) into the given GF(q^2).
const SubfieldEmbedding& quadratic_subfield_embedding(const FieldSpec& sup);

// t^{1+q} for t in GF(q^2), expressed in the canonical GF(q).  Restricted to
// nonzero inputs the map covers GF(q)^* with fibers of size q+1.
FieldElement norm_to_subfield(const FieldElement& t);

// ---------------------------------------------------------------------------
// Dense matrices over GF(p).
// ---------------------------------------------------------------------------
class MatGFp {
 public:
  MatGFp() = default;
  MatGFp(std::uint32_t p, std::uint32_t rows, std::uint32_t cols);
  static MatGFp identity(std::uint32_t p, std::uint32_t n);

  std::uint32_t p() const { return p_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const;
  void set(std::uint32_t i, std::uint32_t j, std::uint32_t v);

  MatGFp operator*(const MatGFp& o) const;
  MatGFp operator+(const MatGFp& o) const;
  bool operator==(const MatGFp& o) const;
  bool operator!=(const MatGFp& o) const { return !(*this == o); }
  MatGFp transpose() const;
  MatGFp pow(std::uint64_t e) const;

  std::uint32_t rank() const;
  bool invertible() const;
  bool is_identity() const;
  // Multiplicative order; requires invertibility.
  std::uint64_t order() const;

  // Apply to a column vector of length cols().
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

 private:
  std::uint32_t p_ = 0, rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;  // row-major
};

// Monic least-degree polynomial annihilating M, found by linear-dependence
// search over I, M, M^2, ...; divides the characteristic polynomial.
Poly minimal_polynomial(const MatGFp& m);

// Solve A x = b over GF(p); nullopt when inconsistent.  A is rows x cols,
// b has length rows.
std::optional<std::vector<std::uint32_t>> solve_linear(const MatGFp& a,
                                                       const std::vector<std::uint32_t>& b);

}  // namespace seslab

#endif
