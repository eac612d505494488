#pragma once

#include <array>
#include <string>
#include <vector>

#include "gl2/complex_structure.hpp"
#include "gl2/exterior.hpp"
#include "gl2/normalization.hpp"

namespace gl2 {

/// A GL(2)-structure presented on a coordinate patch by a coframe whose
/// i-th entry is declared dual to the monomial x^(k-i) y^i.
struct Gl2Structure {
    int k;
    Coframe coframe;

    Gl2Structure(int degree, Coframe cf);
};

/// Coframe of coordinate differentials; zero torsion and curvature.
Gl2Structure flat_structure(int k);

/// Flat coframe with the single unipotent perturbation
/// eta^0 = dp0 + p1 dp2. Requires k >= 2.
Gl2Structure shear_structure(int k);

/// Structure defined by a 1-parameter family of hyperplane fields
/// ker(omega_0 + t omega_1 + ... + t^k omega_k): the coframe dual to the
/// curve of kernel directions is eta^i = (-1)^i omega_{k-i}, normalised so
/// that the kernel at parameter t maps to the power (x + t y)^k. Throws
/// when the input forms are identically dependent.
Gl2Structure veronese_structure(const std::vector<DForm>& omega);

/// 2x2 matrix of connection 1-forms, display layout phi[r][c] (the
/// representation-theory entry phi^{c+1}_{r+1}).
struct ConnectionOnSection {
    std::array<std::array<DForm, 2>, 2> phi;
};

/// Connection 1-forms as the (k+1)x(k+1) banded matrix acting on value
/// indices; entry (r, c) as a 1-form on the patch.
DForm connection_band_entry(int k, const ConnectionOnSection& conn, int r, int c);

struct CanonicalConnectionResult {
    int k;
    ConnectionOnSection connection;
    ConnectionCorrection<RatFunc> psi;  // correction applied to the zero reference connection
    TorsionTensor<RatFunc> torsion;     // canonical torsion in coframe wedge components
    bool residual_zero;                 // first structure equation residual vanishes identically
    bool perp_identically;              // every torsion contraction satisfies the trace conditions
};

/// Solves for the unique connection whose torsion contractions satisfy the
/// four trace conditions, identically on the patch. Requires k >= 3 and a
/// coframe invertible over the rational functions.
CanonicalConnectionResult canonical_connection(const Gl2Structure& s);

/// Torsion of an arbitrary connection on the section, from the structure
/// equation: value component i of d eta + Phi ^ eta, re-expressed in the
/// coframe wedge basis.
TorsionTensor<RatFunc> torsion_of_connection(const Gl2Structure& s, const ConnectionOnSection& conn);

/// Curvature Omega = d phi + phi ^ phi, entrywise 2x2.
std::array<std::array<DForm, 2>, 2> curvature(const ConnectionOnSection& conn);

/// Torsion and curvature components in the complex coframe of an odd-degree
/// structure. Row/column index a < pairs is a (1,0) direction, a >= pairs
/// its conjugate.
struct ComplexBlocks {
    int k = 0;
    int pairs = 0;  // (k+1)/2
    /// torsion[a] = antisymmetric matrix of wedge components for the a-th
    /// complex value row (rows >= pairs are the conjugate rows).
    std::vector<Matrix<RatFunc>> torsion;
    /// zeta-trace of the curvature in the complex frame (antisymmetric).
    Matrix<RatFunc> curvature;
    /// Conjugate-trace counterpart, kept for the reality checks.
    Matrix<RatFunc> curvature_conj;

    bool is_holomorphic(int a) const { return a < pairs; }

    enum class BlockKind { kHolHol, kMixed, kAntiAnti };
    BlockKind classify(int b, int c) const;

    /// All stored torsion entries of the given block for value rows
    /// a < pairs (the (1,0) rows); pairs (b, c) are ordered b < c.
    std::vector<RatFunc> torsion_block(BlockKind kind) const;
    std::vector<RatFunc> curvature_block(BlockKind kind) const;
};

/// Transforms the canonical torsion and the zeta-trace of the curvature to
/// the complex coframe. Requires odd k.
ComplexBlocks complex_decomposition(const Gl2Structure& s, const TorsionTensor<RatFunc>& torsion,
                                    const std::array<std::array<DForm, 2>, 2>& omega);

/// Independent route to the same torsion blocks: expands
/// d(complex coframe row) + Lambda ^ (complex coframe) directly on the
/// patch and reads off the complex wedge components.
std::vector<Matrix<RatFunc>> complex_torsion_direct(const Gl2Structure& s,
                                                    const ConnectionOnSection& conn);

/// Independent route to the curvature blocks through d zeta, using the
/// on-section identity d zeta = i zeta ^ (phi^1_2 - phi^2_1) + Omega_zeta.
Matrix<RatFunc> curvature_blocks_direct(const Gl2Structure& s, const ConnectionOnSection& conn);

struct PointVerdict {
    PatchPoint point;
    bool evaluated = false;  // false when a denominator vanished
    std::string error;
    bool t02_zero = false;
    bool c02_zero = false;
    bool t11_zero = false;
    bool integrable = false;      // t02_zero && c02_zero
    bool implication_ok = true;   // (t11_zero && t02_zero) implies c02_zero
};

struct AnalysisReport {
    int k = 0;
    CanonicalConnectionResult connection;
    std::array<std::array<DForm, 2>, 2> omega;  // curvature entries
    ComplexBlocks blocks;
    bool t02_identically_zero = false;
    bool c02_identically_zero = false;
    bool integrable_identically = false;
    bool reality_ok = false;   // conjugate-block symmetry (real input)
    bool input_real = false;
    std::vector<PointVerdict> verdicts;
};

/// Full pipeline: canonical connection, curvature, complex decomposition,
/// reality guards and per-point integrability verdicts. Requires odd
/// k >= 3.
AnalysisReport integrability_report(const Gl2Structure& s, const std::vector<PatchPoint>& points);

}  // namespace gl2
