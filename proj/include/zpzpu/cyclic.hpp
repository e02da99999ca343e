#pragma once

// Additive cyclic codes: the simultaneous block shift, ideals of
// Z_p[x]/(x^alpha - 1) x R[x]/(x^beta - 1), and their generator presentations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zpzpu/code.hpp"
#include "zpzpu/gray.hpp"
#include "zpzpu/poly.hpp"

namespace zpu {

/// lcm(alpha, beta) with an empty block contributing nothing; S^j fixes every word.
std::size_t shift_order(const Shape& shape) noexcept;

/// Right rotation of the Z_p block and of the R block, simultaneously.
MixedWord shift(const MixedWord& w);
MixedWord shift_by(const MixedWord& w, std::size_t k);

/// Closed under shift. Checks shift(g) for every generator against the enumerated code.
bool is_cyclic(const AdditiveCode& code, std::uint64_t budget = default_budget);
/// Same question answered over every codeword.
bool is_cyclic_exhaustive(const AdditiveCode& code, std::uint64_t budget = default_budget);

/// (a(x), b(x)) -> word, reducing mod x^alpha - 1 and x^beta - 1 first.
MixedWord word_from_polys(const FpPoly& a, const RPoly& b, const Shape& shape);
std::pair<FpPoly, RPoly> polys_from_word(const MixedWord& w);

/// Seeds (f, 0), (h1, g + u p), (h2, u q) of an additive cyclic code.
struct CyclicGenerators {
    Shape shape;
    FpPoly f;
    FpPoly h1;
    RPoly gp;
    FpPoly h2;
    RPoly uq;

    static CyclicGenerators make(const Shape& shape, const FpPoly& f, const FpPoly& h1, const FpPoly& g,
                                 const FpPoly& p, const FpPoly& q, const FpPoly& h2);

    const FpPoly& g() const noexcept { return gp.unit_part(); }
    const FpPoly& p() const noexcept { return gp.u_part(); }
    const FpPoly& q() const noexcept { return uq.u_part(); }
};

enum class ConditionStatus { Holds, Fails, Unevaluable };
std::string format(ConditionStatus s);

struct Condition {
    std::string name;
    ConditionStatus status;
    std::string detail;
};

struct ConditionReport {
    /// 0: all seeds zero; 1: only (f, 0); 2: no kernel part; 3: both.
    int category = 0;
    std::vector<Condition> conditions;
};

/// Divisibility conditions on the canonical representatives; a zero representative of a
/// residue mod x^n - 1 is lifted to x^n - 1 itself. Report only, never rejects.
ConditionReport check_conditions(const CyclicGenerators& gen);

struct CyclicBuild {
    AdditiveCode code;
    ConditionReport report;
};

/// The smallest shift-closed additive code containing the three seeds.
CyclicBuild cyclic_from_generators(const CyclicGenerators& gen, std::uint64_t budget = default_budget);

struct ImagePresentation {
    FpPoly g, p, q;  ///< Image = <g + u p, u q>, representatives of degree < beta
};

struct KernelPresentation {
    FpPoly f;  ///< kernel = <(f, 0)>, representative of degree < alpha
};

/// Projection onto the R block. Throws NotCyclic.
ImagePresentation psi_image(const AdditiveCode& code, std::uint64_t budget = default_budget);
/// Codewords with zero R block. Throws NotCyclic.
KernelPresentation psi_kernel(const AdditiveCode& code, std::uint64_t budget = default_budget);
/// Full seed presentation whose closure reproduces the code. Throws NotCyclic.
CyclicGenerators cyclic_presentation(const AdditiveCode& code, std::uint64_t budget = default_budget);

struct DualCyclicityReport {
    bool dual_cyclic = false;
    std::uint64_t dual_size = 0;
};

/// Throws NotCyclic for a non-cyclic input.
DualCyclicityReport dual_cyclicity_check(const AdditiveCode& code, std::uint64_t budget = default_budget);

/// Rotation of a whole Gray vector by one position.
GrayVector rotate(const GrayVector& v);
/// Rotates the alpha block and both beta blocks of a blockwise Gray image by one.
GrayVector block_shift(const GrayVector& blockwise, const Shape& shape);

struct GrayShiftReport {
    bool full_interleaved = false;  ///< (i)
    bool full_blockwise = false;    ///< (ii)
    bool block_shift = false;       ///< (iii)
};

/// Closure of the Gray image under the three shifts. Throws NotCyclic.
GrayShiftReport gray_shift_analysis(const AdditiveCode& code, std::uint64_t budget = default_budget);

/// One code of the divisor sweep.
struct SweepRow {
    CyclicGenerators gen;
    CodeType type;
    std::optional<std::size_t> dmin;
    bool cyclic = false;
    bool dual_cyclic = false;
    GrayShiftReport gray_shift;
    bool round_trip = false;
};

/// Codes built from f | x^alpha - 1, q | g | x^beta - 1, and h1, h2, p in {0, 1}.
std::vector<SweepRow> cyclic_sweep(const Shape& shape, std::uint64_t budget = default_budget);

/// "alpha beta f|h1|g|p|q|h2 type dmin cyclic_dual gray_shift(i,ii,iii)".
std::string format(const SweepRow& row);

} // namespace zpu
