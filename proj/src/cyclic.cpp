#include "zpzpu/cyclic.hpp"

#include <algorithm>
#include <numeric>

namespace zpu {

std::size_t shift_order(const Shape& shape) noexcept {
    if (shape.alpha() == 0) return shape.beta();
    if (shape.beta() == 0) return shape.alpha();
    return std::lcm(shape.alpha(), shape.beta());
}

MixedWord shift(const MixedWord& w) {
    const auto& shape = w.shape();
    MixedWord out(shape);
    const auto alpha = shape.alpha(), beta = shape.beta();
    for (std::size_t i = 0; i < alpha; ++i) out.set_fp((i + 1) % alpha, w.fp(i));
    for (std::size_t j = 0; j < beta; ++j) out.set_r((j + 1) % beta, w.r(j));
    return out;
}

MixedWord shift_by(const MixedWord& w, std::size_t k) {
    MixedWord out = w;
    for (std::size_t i = 0; i < k % shift_order(w.shape()); ++i) out = shift(out);
    return out;
}

bool is_cyclic(const AdditiveCode& code, std::uint64_t budget) {
    auto set = enumerate(code, budget);
    return std::all_of(code.generators().begin(), code.generators().end(),
                       [&](const MixedWord& g) { return set.contains(shift(g)); });
}

bool is_cyclic_exhaustive(const AdditiveCode& code, std::uint64_t budget) {
    auto set = enumerate(code, budget);
    for (std::size_t i = 0; i < set.size(); ++i)
        if (!set.contains(shift(set.word(i)))) return false;
    return true;
}

MixedWord word_from_polys(const FpPoly& a, const RPoly& b, const Shape& shape) {
    auto ar = reduce_mod_xn_minus_1(a, shape.alpha());
    auto br = reduce_mod_xn_minus_1(b, shape.beta());
    MixedWord w(shape);
    for (std::size_t i = 0; i < shape.alpha(); ++i) w.set_fp(i, {ar.coeff(i), shape.ctx()});
    for (std::size_t j = 0; j < shape.beta(); ++j) w.set_r(j, br.coeff(j));
    return w;
}

std::pair<FpPoly, RPoly> polys_from_word(const MixedWord& w) {
    const auto& ctx = w.shape().ctx();
    FpPoly a(ctx, {w.fp_values().begin(), w.fp_values().end()});
    RPoly b(ctx, {w.r_values().begin(), w.r_values().end()});
    return {std::move(a), std::move(b)};
}

CyclicGenerators CyclicGenerators::make(const Shape& shape, const FpPoly& f, const FpPoly& h1, const FpPoly& g,
                                        const FpPoly& p, const FpPoly& q, const FpPoly& h2) {
    const auto& ctx = shape.ctx();
    const auto alpha = shape.alpha(), beta = shape.beta();
    return {shape,
            reduce_mod_xn_minus_1(f, alpha),
            reduce_mod_xn_minus_1(h1, alpha),
            reduce_mod_xn_minus_1(RPoly(g, p), beta),
            reduce_mod_xn_minus_1(h2, alpha),
            reduce_mod_xn_minus_1(RPoly(FpPoly(ctx), q), beta)};
}

std::string format(ConditionStatus s) {
    switch (s) {
    case ConditionStatus::Holds: return "holds";
    case ConditionStatus::Fails: return "fails";
    case ConditionStatus::Unevaluable: return "unevaluable";
    }
    return "";
}

namespace {

FpPoly lift(const FpPoly& rep, std::size_t n) {
    return rep.is_zero() ? FpPoly::xn_minus_1(rep.ctx(), n) : rep;
}

Condition divisibility(std::string name, const FpPoly& d, const FpPoly& x) {
    bool ok = fp_poly_divides(d, x);
    return {std::move(name), ok ? ConditionStatus::Holds : ConditionStatus::Fails,
            "(" + format(d) + ") " + (ok ? "divides" : "does not divide") + " (" + format(x) + ")"};
}

} // namespace

ConditionReport check_conditions(const CyclicGenerators& gen) {
    const auto& shape = gen.shape;
    const auto& ctx = shape.ctx();
    ConditionReport report;
    bool kernel = !gen.f.is_zero();
    bool image = !gen.gp.is_zero() || !gen.uq.is_zero();
    report.category = kernel && image ? 3 : kernel ? 1 : image ? 2 : 0;

    auto& out = report.conditions;
    if (shape.beta() == 0) {
        for (auto name : {"q | g", "g | x^beta-1", "q | p(x^beta-1)/g", "f | h1(x^beta-1)/l, l = lcm(p,q)",
                          "(x^r-1) | p(x^beta-1)/g"})
            out.push_back({name, ConditionStatus::Unevaluable, "empty R block"});
        return report;
    }
    const auto xb = FpPoly::xn_minus_1(ctx, shape.beta());
    const auto G = lift(gen.g(), shape.beta());
    const auto Q = lift(gen.q(), shape.beta());
    out.push_back(divisibility("q | g", Q, G));
    out.push_back(divisibility("g | x^beta-1", G, xb));
    if (fp_poly_divides(G, xb)) {
        auto cofactor = fp_poly_divmod(xb, G).first;
        out.push_back(divisibility("q | p(x^beta-1)/g", Q, gen.p() * cofactor));
    } else {
        out.push_back({"q | p(x^beta-1)/g", ConditionStatus::Unevaluable, "g does not divide x^beta-1"});
    }
    const std::string kernel_name = "f | h1(x^beta-1)/l, l = lcm(p,q)";
    if (shape.alpha() == 0) {
        out.push_back({kernel_name, ConditionStatus::Unevaluable, "empty Z_p block"});
    } else {
        auto l = fp_poly_lcm(lift(gen.p(), shape.beta()), Q);
        if (!fp_poly_divides(l, xb)) {
            out.push_back({kernel_name, ConditionStatus::Unevaluable, "l = " + format(l) + " does not divide x^beta-1"});
        } else {
            auto cofactor = fp_poly_divmod(xb, l).first;
            auto cond = divisibility(kernel_name, lift(gen.f, shape.alpha()), gen.h1 * cofactor);
            cond.detail += ", l = " + format(l);
            out.push_back(std::move(cond));
        }
    }
    out.push_back({"(x^r-1) | p(x^beta-1)/g", ConditionStatus::Unevaluable, "r is not defined"});
    return report;
}

CyclicBuild cyclic_from_generators(const CyclicGenerators& gen, std::uint64_t budget) {
    const auto& shape = gen.shape;
    const auto& ctx = shape.ctx();
    std::vector<MixedWord> seeds{word_from_polys(gen.f, RPoly(ctx), shape), word_from_polys(gen.h1, gen.gp, shape),
                                 word_from_polys(gen.h2, gen.uq, shape)};
    std::vector<MixedWord> gens;
    const auto j = shift_order(shape);
    for (const auto& seed : seeds) {
        if (seed.is_zero()) continue;
        MixedWord w = seed;
        for (std::size_t i = 0; i < j; ++i, w = shift(w))
            if (std::find(gens.begin(), gens.end(), w) == gens.end()) gens.push_back(w);
    }
    AdditiveCode code(shape, std::move(gens));
    enumerate(code, budget);
    return {std::move(code), check_conditions(gen)};
}

namespace {

FpPoly rep_mod(const FpPoly& x, std::size_t n) {
    auto r = reduce_mod_xn_minus_1(x, n);
    if (r == FpPoly::xn_minus_1(x.ctx(), n)) return FpPoly(x.ctx());
    return r;
}

// Monic generator of the ideal of Z_p[x]/(x^n - 1) generated by `polys`, as a representative of
// degree < n (zero for the zero ideal).
FpPoly ideal_generator(const std::vector<FpPoly>& polys, const PrimeCtx& ctx, std::size_t n) {
    FpPoly g = FpPoly::xn_minus_1(ctx, n);
    for (const auto& a : polys) g = fp_poly_gcd(g, a);
    return rep_mod(g, n);
}

FpPoly reduce_by(const FpPoly& x, const FpPoly& rep, std::size_t n) {
    return fp_poly_divmod(x, lift(rep, n)).second;
}

void require_cyclic(const AdditiveCode& code, std::uint64_t budget) {
    if (!is_cyclic(code, budget)) throw NotCyclic();
}

} // namespace

ImagePresentation psi_image(const AdditiveCode& code, std::uint64_t budget) {
    require_cyclic(code, budget);
    const auto& shape = code.shape();
    const auto& ctx = shape.ctx();
    ImagePresentation out{FpPoly(ctx), FpPoly(ctx), FpPoly(ctx)};
    if (shape.beta() == 0) return out;
    const auto beta = shape.beta();
    auto set = enumerate(code, budget);
    std::vector<RPoly> image;
    for (std::size_t i = 0; i < set.size(); ++i) image.push_back(polys_from_word(set.word(i)).second);

    std::vector<FpPoly> residues, torsion;
    for (const auto& b : image) {
        residues.push_back(b.unit_part());
        if (b.unit_part().is_zero()) torsion.push_back(b.u_part());
    }
    out.g = ideal_generator(residues, ctx, beta);
    out.q = ideal_generator(torsion, ctx, beta);
    auto preimage = std::find_if(image.begin(), image.end(), [&](const RPoly& b) { return b.unit_part() == out.g; });
    if (preimage == image.end()) throw Error("image has no element with residue " + format(out.g));
    out.p = reduce_by(preimage->u_part(), out.q, beta);
    return out;
}

KernelPresentation psi_kernel(const AdditiveCode& code, std::uint64_t budget) {
    require_cyclic(code, budget);
    const auto& shape = code.shape();
    const auto& ctx = shape.ctx();
    if (shape.alpha() == 0) return {FpPoly(ctx)};
    auto set = enumerate(code, budget);
    std::vector<FpPoly> kernel;
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto [a, b] = polys_from_word(set.word(i));
        if (b.is_zero()) kernel.push_back(a);
    }
    return {ideal_generator(kernel, ctx, shape.alpha())};
}

CyclicGenerators cyclic_presentation(const AdditiveCode& code, std::uint64_t budget) {
    auto image = psi_image(code, budget);
    auto kernel = psi_kernel(code, budget);
    const auto& shape = code.shape();
    const auto& ctx = shape.ctx();
    auto gen = CyclicGenerators::make(shape, kernel.f, FpPoly(ctx), image.g, image.p, image.q, FpPoly(ctx));
    if (shape.alpha() == 0) return gen;
    auto set = enumerate(code, budget);
    auto companion = [&](const RPoly& target) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            auto [a, b] = polys_from_word(set.word(i));
            if (b == target) return reduce_by(a, kernel.f, shape.alpha());
        }
        throw Error("image element " + format(target) + " has no preimage");
    };
    gen.h1 = companion(gen.gp);
    gen.h2 = companion(gen.uq);
    return gen;
}

DualCyclicityReport dual_cyclicity_check(const AdditiveCode& code, std::uint64_t budget) {
    require_cyclic(code, budget);
    auto dual = dual_oracle(code, DualStrategy::Nullspace, budget);
    return {is_cyclic(dual, budget), enumerate(dual, budget).size()};
}

GrayVector rotate(const GrayVector& v) {
    GrayVector out = v;
    if (!v.entries.empty()) std::rotate(out.entries.rbegin(), out.entries.rbegin() + 1, out.entries.rend());
    return out;
}

GrayVector block_shift(const GrayVector& blockwise, const Shape& shape) {
    GrayVector out = blockwise;
    auto rot = [&](std::size_t begin, std::size_t len) {
        if (len == 0) return;
        auto first = out.entries.begin() + static_cast<std::ptrdiff_t>(begin);
        std::rotate(first, first + static_cast<std::ptrdiff_t>(len - 1), first + static_cast<std::ptrdiff_t>(len));
    };
    rot(0, shape.alpha());
    rot(shape.alpha(), shape.beta());
    rot(shape.alpha() + shape.beta(), shape.beta());
    return out;
}

GrayShiftReport gray_shift_analysis(const AdditiveCode& code, std::uint64_t budget) {
    require_cyclic(code, budget);
    const auto& shape = code.shape();
    auto set = enumerate(code, budget);
    auto interleaved = gray_image(set, GrayOrdering::Interleaved);
    auto blockwise = gray_image(set, GrayOrdering::Blockwise);
    WordIndex index(shape.p(), shape.n());
    auto in = [&](const std::vector<std::uint64_t>& s, const GrayVector& v) {
        return std::binary_search(s.begin(), s.end(), index.encode(v.entries));
    };
    GrayShiftReport report{true, true, true};
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto w = set.word(i);
        auto pi = phi(w, GrayOrdering::Interleaved);
        auto pb = phi(w, GrayOrdering::Blockwise);
        report.full_interleaved = report.full_interleaved && in(interleaved, rotate(pi));
        report.full_blockwise = report.full_blockwise && in(blockwise, rotate(pb));
        report.block_shift = report.block_shift && in(blockwise, block_shift(pb, shape));
    }
    return report;
}

std::vector<SweepRow> cyclic_sweep(const Shape& shape, std::uint64_t budget) {
    const auto& ctx = shape.ctx();
    auto divisors = [&](std::size_t n) {
        return n == 0 ? std::vector<FpPoly>{FpPoly(ctx)} : monic_divisors_xn_minus_1(ctx, n);
    };
    const auto fs = divisors(shape.alpha());
    const auto gs = divisors(shape.beta());
    std::vector<FpPoly> small{FpPoly(ctx), FpPoly::constant(ctx, 1)};
    std::vector<FpPoly> hs = shape.alpha() == 0 ? std::vector<FpPoly>{FpPoly(ctx)} : small;

    std::vector<SweepRow> rows;
    for (const auto& f : fs)
        for (const auto& g : gs)
            for (const auto& q : gs) {
                if (!fp_poly_divides(q, g)) continue;
                for (const auto& p : small)
                    for (const auto& h1 : hs)
                        for (const auto& h2 : hs) {
                            auto gen = CyclicGenerators::make(shape, f, h1, g, p, q, h2);
                            auto build = cyclic_from_generators(gen, budget);
                            const auto& code = build.code;
                            auto set = enumerate(code, budget);
                            SweepRow row{gen, standard_form(code).type()};
                            if (set.size() >= 2) row.dmin = min_distance(code, Metric::Gray, budget);
                            row.cyclic = is_cyclic(code, budget);
                            if (row.cyclic) {
                                row.dual_cyclic = dual_cyclicity_check(code, budget).dual_cyclic;
                                row.gray_shift = gray_shift_analysis(code, budget);
                                auto rebuilt = cyclic_from_generators(cyclic_presentation(code, budget), budget);
                                row.round_trip = enumerate(rebuilt.code, budget) == set;
                            }
                            rows.push_back(std::move(row));
                        }
            }
    return rows;
}

std::string format(const SweepRow& row) {
    auto pf = [](const FpPoly& x) { return format(x, true); };
    auto pass = [](bool b) { return std::string(b ? "PASS" : "FAIL"); };
    const auto& gen = row.gen;
    return std::to_string(gen.shape.alpha()) + " " + std::to_string(gen.shape.beta()) + " " + pf(gen.f) + "|" +
           pf(gen.h1) + "|" + pf(gen.g()) + "|" + pf(gen.p()) + "|" + pf(gen.q()) + "|" + pf(gen.h2) + " " +
           format(row.type) + " " + (row.dmin ? std::to_string(*row.dmin) : "-") + " " + pass(row.dual_cyclic) +
           " " + pass(row.gray_shift.full_interleaved) + "," + pass(row.gray_shift.full_blockwise) + "," +
           pass(row.gray_shift.block_shift);
}

} // namespace zpu
