#pragma once

#include <string>
#include <vector>

#include "negabase/interval.hpp"

namespace negabase {

// Element of Q[X]/(min_poly), stored on the power basis 1, beta, ..., beta^{d-1}.
// coords always has exactly d entries.
struct FieldElement {
    std::vector<Rat> coords;

    bool operator==(const FieldElement& o) const { return coords == o.coords; }
    bool operator<(const FieldElement& o) const { return coords < o.coords; }
};

// Real algebraic base defined by a monic integer polynomial with exactly one
// real root beta > 1.  Arithmetic is exact; order predicates are decided by
// refining a rational enclosure of beta, with an exact gcd-based zero test so
// that signs are never guessed.
class NumberField {
  public:
    static NumberField make(const IntPoly& min_poly);

    int degree() const { return deg_; }
    const IntPoly& min_poly() const { return min_poly_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement beta() const;
    FieldElement from_rational(const Rat& q) const;
    FieldElement from_int(const Int& n) const { return from_rational(Rat(n)); }

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul_rat(const FieldElement& a, const Rat& c) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;

    bool is_zero(const FieldElement& a) const;
    bool equal(const FieldElement& a, const FieldElement& b) const;
    int sign(const FieldElement& a) const;
    int compare(const FieldElement& a, const FieldElement& b) const;
    Int floor(const FieldElement& a) const;
    bool is_rational(const FieldElement& a) const;
    Rat as_rational(const FieldElement& a) const;

    // Rational enclosure of beta, refined to at most the requested width.
    RatInterval beta_enclosure(const Rat& max_width) const;

    // Galois conjugates of beta (all other roots of min_poly).  Complex pairs
    // are represented by the member in the open upper half plane.
    int num_conjugates() const { return (int)conj_.size(); }
    bool conjugate_is_real(int i) const { return conj_[i].real; }
    SqrtBounds conjugate_modulus(int i, const Rat& eps) const;
    SqrtBounds element_conjugate_modulus(const FieldElement& a, int i,
                                         const Rat& eps) const;

    bool is_pisot() const;

    std::string to_string(const FieldElement& a) const;

  private:
    NumberField() = default;

    struct Conj {
        ComplexBox box;
        bool real = false;
        int sign_lo = 0;  // sign of min_poly at box.re.lo when real
    };

    void isolate_roots();
    void refine_beta() const;
    void refine_conjugate(int i) const;
    void refine_real(RatInterval& iv, int& sign_lo) const;
    bool newton_step(ComplexBox& box) const;
    bool quadrisect_step(ComplexBox& box) const;
    bool beta_is_root_of(const RatPoly& g) const;
    RatPoly coords_poly(const FieldElement& a) const;

    int deg_ = 0;
    IntPoly min_poly_;
    RatPoly min_rat_;
    bool rational_beta_ = false;
    Rat beta_rat_;
    mutable RatInterval beta_iv_{Rat(0), Rat(0)};
    mutable int beta_sign_lo_ = 0;
    mutable std::vector<Conj> conj_;
};

}  // namespace negabase
