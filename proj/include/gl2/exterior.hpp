#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gl2/ratfunc.hpp"
#include "gl2/torsion.hpp"

namespace gl2 {

/// Coordinate patch: an ordered list of distinct variable names. The
/// default naming is p0..p_{n-1}.
class Patch {
public:
    explicit Patch(int n);
    explicit Patch(std::vector<std::string> names);

    int dim() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(int i) const { return vars_.at(static_cast<size_t>(i)); }
    int var_index(const std::string& name) const;  // throws if unknown

    friend bool operator==(const Patch& a, const Patch& b) { return a.vars_ == b.vars_; }
    friend bool operator!=(const Patch& a, const Patch& b) { return !(a == b); }

private:
    std::vector<std::string> vars_;
};

/// Rational point of a patch.
using PatchPoint = std::vector<Rational>;

/// Differential form with rational-function coefficients on a patch.
/// Components are stored on strictly increasing index tuples, encoded as
/// bit masks over the patch variables; antisymmetry is absorbed into the
/// canonical ordering.
class DForm {
public:
    using Mask = uint32_t;

    DForm(Patch patch, int degree);
    static DForm function(Patch patch, RatFunc f);  // degree 0
    static DForm dp(Patch patch, int i);            // coordinate differential

    const Patch& patch() const { return patch_; }
    int degree() const { return degree_; }
    const std::map<Mask, RatFunc>& components() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    RatFunc coeff(Mask m) const;
    /// Adds v on the (already strictly increasing) index set m.
    void add_term(Mask m, const RatFunc& v);

    friend DForm operator-(const DForm& a);
    friend DForm operator+(const DForm& a, const DForm& b);
    friend DForm operator-(const DForm& a, const DForm& b);
    DForm& operator+=(const DForm& b) { return *this = *this + b; }
    DForm& operator-=(const DForm& b) { return *this = *this - b; }
    friend DForm operator*(const RatFunc& f, const DForm& a);
    friend bool operator==(const DForm& a, const DForm& b);
    friend bool operator!=(const DForm& a, const DForm& b) { return !(a == b); }

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const DForm& a);

private:
    static int mask_degree(Mask m);
    Patch patch_;
    int degree_;
    std::map<Mask, RatFunc> c_;
};

/// Graded-commutative wedge product; throws on patch mismatch.
DForm wedge(const DForm& a, const DForm& b);

/// Exterior derivative, exact via formal partial derivatives.
DForm ext_d(const DForm& a);

/// Exact evaluation of every component at a rational point; throws
/// std::domain_error (naming the coefficient) when a denominator vanishes.
std::map<DForm::Mask, GaussRational> evaluate_at(const DForm& a, const PatchPoint& point);

/// A set of 1-forms on a common patch; when square and invertible it
/// presents a coframe.
class Coframe {
public:
    Coframe(Patch patch, std::vector<DForm> forms);

    const Patch& patch() const { return patch_; }
    int size() const { return static_cast<int>(forms_.size()); }
    const DForm& form(int i) const { return forms_.at(static_cast<size_t>(i)); }
    const std::vector<DForm>& forms() const { return forms_; }

    /// A(i, j) = coefficient of dp_j in the i-th form.
    Matrix<RatFunc> coefficient_matrix() const;

    /// Inverse transpose data for re-expressing dp's in the coframe; throws
    /// std::domain_error if the coframe is singular as a rational-function
    /// matrix.
    Matrix<RatFunc> inverse_coefficient_matrix() const;

private:
    Patch patch_;
    std::vector<DForm> forms_;
};

/// Structure functions c^i_{jl} of a coframe, under the convention
/// d eta^i = (1/2) c^i_{jl} eta^j ^ eta^l (sum over all pairs, c
/// antisymmetric), i.e. the stored j < l component is the plain wedge
/// coefficient of eta^j ^ eta^l in d eta^i.
TorsionTensor<RatFunc> structure_functions(const Coframe& cf);

/// Re-expresses a 2-form in the coframe wedge basis: returns the tensor of
/// wedge coefficients t_{jl} (j < l) with form = sum t_{jl} eta^j ^ eta^l.
/// ainv must be coframe.inverse_coefficient_matrix().
Matrix<RatFunc> two_form_in_coframe(const DForm& form, const Matrix<RatFunc>& ainv);

/// Residual d eta^i - sum_{j<l} c^i_{jl} eta^j ^ eta^l; identically zero by
/// construction, exposed for round-trip verification.
DForm structure_residual(const Coframe& cf, const TorsionTensor<RatFunc>& c, int i);

}  // namespace gl2
