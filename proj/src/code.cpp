#include "zpzpu/code.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "zpzpu/gray.hpp"
#include "zpzpu/parallel.hpp"

namespace zpu {

CodewordSet::CodewordSet(const Shape& shape, std::vector<std::uint64_t> sorted_keys)
    : shape_(shape), index_(shape.p(), shape.n()), keys_(std::move(sorted_keys)) {}

std::uint64_t key_of(const WordIndex& index, const MixedWord& w) { return index.encode(to_linear(w)); }

bool CodewordSet::contains(const MixedWord& w) const {
    if (!(w.shape() == shape_)) throw ShapeMismatch("word shape " + format(w.shape()) + " vs code " + format(shape_));
    return contains_key(key_of(index_, w));
}

bool CodewordSet::contains_key(std::uint64_t key) const {
    return std::binary_search(keys_.begin(), keys_.end(), key);
}

MixedWord CodewordSet::word(std::size_t i) const { return from_linear(shape_, index_.decode(keys_.at(i))); }

std::vector<MixedWord> CodewordSet::words() const {
    std::vector<MixedWord> out;
    out.reserve(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) out.push_back(word(i));
    return out;
}

struct AdditiveCode::Cache {
    std::mutex mutex;
    std::shared_ptr<const CodewordSet> set;
};

AdditiveCode::AdditiveCode(const Shape& shape, std::vector<MixedWord> generators)
    : shape_(shape), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : generators_)
        if (!(g.shape() == shape_))
            throw ShapeMismatch("generator shape " + format(g.shape()) + " vs code " + format(shape_));
}

CodewordSet enumerate(const AdditiveCode& code, std::uint64_t budget) {
    std::lock_guard lock(code.cache_->mutex);
    if (auto cached = code.cache_->set) {
        if (cached->size() > budget) throw BudgetExceeded("code of " + std::to_string(cached->size()) + " words", budget);
        return *cached;
    }
    const auto& shape = code.shape();
    WordIndex index(shape.p(), shape.n());
    const auto p = shape.p();
    const auto u = RElem::u(shape.ctx());
    std::vector<std::uint64_t> elems{0};
    for (const auto& g : code.generators()) {
        for (const auto& v : {g, scalar_mul_r(u, g)}) {
            auto key = key_of(index, v);
            if (std::binary_search(elems.begin(), elems.end(), key)) continue;
            // v is outside the current subgroup S, so S + Z_p v has exactly p |S| elements.
            if (elems.size() > budget / p)
                throw BudgetExceeded("code closure of " + std::to_string(elems.size() * p) + "+ words", budget);
            auto base = elems.size();
            elems.reserve(base * p);
            for (std::uint32_t k = 1; k < p; ++k) {
                auto kv = index.scale(k, key);
                for (std::size_t i = 0; i < base; ++i) elems.push_back(index.add(elems[i], kv));
            }
            std::sort(elems.begin(), elems.end());
        }
    }
    auto set = std::make_shared<const CodewordSet>(shape, std::move(elems));
    code.cache_->set = set;
    return *set;
}

bool contains(const AdditiveCode& code, const MixedWord& w, std::uint64_t budget) {
    return enumerate(code, budget).contains(w);
}

std::vector<ZpVector> zp_basis(const AdditiveCode& code) {
    const auto& shape = code.shape();
    std::vector<ZpVector> rows;
    for (const auto& g : code.generators()) {
        rows.push_back(to_linear(g));
        rows.push_back(to_linear(scalar_mul_r(RElem::u(shape.ctx()), g)));
    }
    return rref(std::move(rows), shape.n(), shape.ctx()).rows;
}

AdditiveCode ambient_code(const Shape& shape) {
    std::vector<MixedWord> gens;
    for (std::size_t i = 0; i < shape.alpha(); ++i) {
        MixedWord w(shape);
        w.set_fp(i, FpElem::one(shape.ctx()));
        gens.push_back(w);
    }
    for (std::size_t j = 0; j < shape.beta(); ++j) {
        MixedWord w(shape);
        w.set_r(j, RElem::one(shape.ctx()));
        gens.push_back(w);
    }
    return {shape, std::move(gens)};
}

std::uint64_t CodeType::predicted_size() const noexcept { return saturating_pow(p, 2 * k0 + k1); }

std::string format(const CodeType& t) {
    return "(" + std::to_string(t.p) + ";" + std::to_string(t.alpha) + "," + std::to_string(t.beta) + ";" +
           std::to_string(t.k0) + "," + std::to_string(t.k1) + ")";
}

CodeType StandardForm::type() const noexcept {
    return {shape.p(), shape.alpha(), shape.beta(), k0, k1(), kappa};
}

MixedWord permute_columns(const MixedWord& w, const std::vector<std::size_t>& fp_perm,
                          const std::vector<std::size_t>& r_perm) {
    MixedWord out(w.shape());
    for (std::size_t k = 0; k < fp_perm.size(); ++k) out.set_fp(k, w.fp(fp_perm[k]));
    for (std::size_t k = 0; k < r_perm.size(); ++k) out.set_r(k, w.r(r_perm[k]));
    return out;
}

namespace {

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
    return inv;
}

// Completes `pivots` with the remaining indices in ascending order.
std::vector<std::size_t> pivots_first(std::vector<std::size_t> pivots, std::size_t n) {
    std::vector<bool> used(n, false);
    for (auto c : pivots) used[c] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!used[c]) pivots.push_back(c);
    return pivots;
}

} // namespace

std::vector<MixedWord> StandardForm::rows_in_input_order() const {
    auto fp_inv = inverse_permutation(fp_perm);
    auto r_inv = inverse_permutation(r_perm);
    std::vector<MixedWord> out;
    for (const auto& row : rows) out.push_back(permute_columns(row, fp_inv, r_inv));
    return out;
}

AdditiveCode StandardForm::reassembled() const { return {shape, rows_in_input_order()}; }

StandardForm standard_form(const AdditiveCode& code) {
    const auto& shape = code.shape();
    const auto& ctx = shape.ctx();
    std::vector<MixedWord> rest;
    for (const auto& g : code.generators())
        if (!g.is_zero()) rest.push_back(g);

    std::vector<MixedWord> free_rows, u_rows, zp_rows;
    std::vector<std::size_t> free_cols, u_cols, zp_cols;
    std::vector<bool> is_free_col(shape.beta(), false);

    // (i) unit pivots in the R block.
    for (std::size_t j = 0; j < shape.beta(); ++j) {
        auto it = std::find_if(rest.begin(), rest.end(), [j](const MixedWord& w) { return w.r(j).is_unit(); });
        if (it == rest.end()) continue;
        auto pivot = scalar_mul_r(r_inv(it->r(j)), *it);
        rest.erase(it);
        auto clear = [&](MixedWord& row) {
            if (!row.r(j).is_zero()) row = row - scalar_mul_r(row.r(j), pivot);
        };
        for (auto& row : free_rows) clear(row);
        for (auto& row : rest) clear(row);
        free_rows.push_back(std::move(pivot));
        free_cols.push_back(j);
        is_free_col[j] = true;
    }

    // (ii) u pivots among the remaining rows, whose R entries now all lie in uZ_p.
    for (std::size_t j = 0; j < shape.beta(); ++j) {
        if (is_free_col[j]) continue;
        auto it = std::find_if(rest.begin(), rest.end(), [j](const MixedWord& w) { return !w.r(j).is_zero(); });
        if (it == rest.end()) continue;
        auto pivot = scalar_mul_fp(it->r(j).b().inverse(), *it);
        rest.erase(it);
        auto clear = [&](MixedWord& row) {
            if (row.r(j).u_part() != 0) row = row - scalar_mul_fp(row.r(j).b(), pivot);
        };
        for (auto& row : free_rows) clear(row);
        for (auto& row : u_rows) clear(row);
        for (auto& row : rest) clear(row);
        u_rows.push_back(std::move(pivot));
        u_cols.push_back(j);
    }

    // (iii) what is left has no R component: Gaussian elimination in the Z_p block.
    for (std::size_t i = 0; i < shape.alpha(); ++i) {
        auto it = std::find_if(rest.begin(), rest.end(), [i](const MixedWord& w) { return w.fp_values()[i] != 0; });
        if (it == rest.end()) continue;
        auto pivot = scalar_mul_fp(it->fp(i).inverse(), *it);
        rest.erase(it);
        auto clear = [&](MixedWord& row) {
            if (row.fp_values()[i] != 0) row = row - scalar_mul_fp(row.fp(i), pivot);
        };
        for (auto& row : free_rows) clear(row);
        for (auto& row : u_rows) clear(row);
        for (auto& row : zp_rows) clear(row);
        for (auto& row : rest) clear(row);
        zp_rows.push_back(std::move(pivot));
        zp_cols.push_back(i);
    }

    StandardForm sf{shape};
    sf.k0 = free_rows.size();
    sf.k1_u = u_rows.size();
    sf.kappa = zp_rows.size();
    sf.fp_perm = pivots_first(zp_cols, shape.alpha());
    auto r_pivots = free_cols;
    r_pivots.insert(r_pivots.end(), u_cols.begin(), u_cols.end());
    sf.r_perm = pivots_first(r_pivots, shape.beta());
    for (const auto* group : {&free_rows, &u_rows, &zp_rows})
        for (const auto& row : *group) sf.rows.push_back(permute_columns(row, sf.fp_perm, sf.r_perm));

    const auto rest_begin = sf.k0 + sf.k1_u;
    for (std::size_t i = 0; i < sf.k0; ++i) {
        const auto& row = sf.rows[i];
        std::vector<FpElem> a;
        for (std::size_t t = sf.k0; t < rest_begin; ++t) a.push_back(row.r(t).a());
        sf.A.push_back(std::move(a));
        std::vector<RElem> b(row.r_values().begin() + static_cast<std::ptrdiff_t>(rest_begin), row.r_values().end());
        sf.B.push_back(std::move(b));
    }
    for (std::size_t s = 0; s < sf.k1_u; ++s) {
        const auto& row = sf.rows[sf.k0 + s];
        std::vector<FpElem> d;
        for (std::size_t t = rest_begin; t < shape.beta(); ++t) d.push_back(row.r(t).b());
        sf.D.push_back(std::move(d));
    }

    for (std::size_t s = 0; s < zp_rows.size(); ++s)
        sf.notes.push_back("row " + std::to_string(sf.k0 + sf.k1_u + s) +
                           " is a pure Z_p row with pivot at Z_p coordinate " + std::to_string(zp_cols[s]) +
                           "; counted in k1");
    for (std::size_t s = 0; s < u_rows.size(); ++s)
        if (std::any_of(u_rows[s].fp_values().begin(), u_rows[s].fp_values().end(), [](auto v) { return v != 0; }))
            sf.notes.push_back("row " + std::to_string(sf.k0 + s) + " is a u-row with nonzero Z_p block entries");
    (void)ctx;
    return sf;
}

CodewordSet dual_scan(const AdditiveCode& code, std::uint64_t budget) {
    const auto& shape = code.shape();
    WordIndex index(shape.p(), shape.n());
    if (index.size() > budget) throw BudgetExceeded("ambient space " + format(shape), budget);
    std::vector<std::vector<std::uint64_t>> parts(thread_count());
    auto chunks = parallel_chunks(index.size(), [&](std::uint64_t begin, std::uint64_t end, std::size_t k) {
        ZpVector coords(shape.n());
        for (std::uint64_t key = begin; key < end; ++key) {
            index.decode(key, coords);
            auto w = from_linear(shape, coords);
            bool orthogonal = std::all_of(code.generators().begin(), code.generators().end(),
                                          [&](const MixedWord& g) { return inner_product(g, w).is_zero(); });
            if (orthogonal) parts[k].push_back(key);
        }
    });
    std::vector<std::uint64_t> keys;
    for (std::size_t k = 0; k < chunks; ++k) keys.insert(keys.end(), parts[k].begin(), parts[k].end());
    return {shape, std::move(keys)};
}

namespace {

// Greedy generators for a set known to be a Z_p-subspace: walk the set in order and keep every
// word not already in the span of the kept ones.
std::vector<MixedWord> greedy_generators(const CodewordSet& set) {
    const auto& index = set.index();
    const auto p = set.shape().p();
    std::vector<std::uint64_t> span{0};
    std::vector<MixedWord> gens;
    for (auto key : set.keys()) {
        if (std::binary_search(span.begin(), span.end(), key)) continue;
        gens.push_back(from_linear(set.shape(), index.decode(key)));
        auto base = span.size();
        for (std::uint32_t k = 1; k < p; ++k) {
            auto kv = index.scale(k, key);
            for (std::size_t i = 0; i < base; ++i) span.push_back(index.add(span[i], kv));
        }
        std::sort(span.begin(), span.end());
    }
    return gens;
}

} // namespace

AdditiveCode dual_oracle(const AdditiveCode& code, DualStrategy strategy, std::uint64_t budget) {
    const auto& shape = code.shape();
    if (strategy == DualStrategy::Exhaustive) return {shape, greedy_generators(dual_scan(code, budget))};

    // Generator (v | c_j + u d_j) against unknown (x | a_j + u b_j):
    //   unit part:  sum c_j a_j = 0
    //   u part:     sum v_i x_i + sum (c_j b_j + d_j a_j) = 0
    std::vector<ZpVector> equations;
    for (const auto& g : code.generators()) {
        ZpVector unit(shape.n(), 0), upart(shape.n(), 0);
        for (std::size_t i = 0; i < shape.alpha(); ++i) upart[i] = g.fp_values()[i];
        for (std::size_t j = 0; j < shape.beta(); ++j) {
            auto a_pos = shape.alpha() + 2 * j;
            unit[a_pos] = g.r(j).unit_part();
            upart[a_pos] = g.r(j).u_part();
            upart[a_pos + 1] = g.r(j).unit_part();
        }
        equations.push_back(std::move(unit));
        equations.push_back(std::move(upart));
    }
    std::vector<MixedWord> gens;
    for (const auto& v : nullspace(equations, shape.n(), shape.ctx())) gens.push_back(from_linear(shape, v));
    return {shape, std::move(gens)};
}

UniformRow to_uniform(const MixedWord& w) {
    UniformRow out;
    for (std::size_t i = 0; i < w.shape().alpha(); ++i) out.emplace_back(w.fp(i));
    out.insert(out.end(), w.r_values().begin(), w.r_values().end());
    return out;
}

bool is_well_typed(const UniformRow& row, const Shape& shape) {
    if (row.size() != shape.alpha() + shape.beta()) return false;
    for (std::size_t i = 0; i < shape.alpha(); ++i)
        if (!row[i].is_pure()) return false;
    return true;
}

MixedWord from_uniform(const UniformRow& row, const Shape& shape) {
    if (!is_well_typed(row, shape)) throw ShapeMismatch("row is not a word of shape " + format(shape));
    std::vector<FpElem> fp;
    for (std::size_t i = 0; i < shape.alpha(); ++i) fp.push_back(row[i].a());
    return {shape, std::move(fp), std::vector<RElem>(row.begin() + static_cast<std::ptrdiff_t>(shape.alpha()), row.end())};
}

RElem uniform_inner_product(const UniformRow& x, const UniformRow& y, const Shape& shape) {
    const auto& ctx = shape.ctx();
    RElem fp_sum = RElem::zero(ctx), r_sum = RElem::zero(ctx);
    for (std::size_t i = 0; i < shape.alpha(); ++i) fp_sum = fp_sum + x[i] * y[i];
    for (std::size_t j = shape.alpha(); j < x.size(); ++j) r_sum = r_sum + x[j] * y[j];
    return RElem::u(ctx) * fp_sum + r_sum;
}

std::vector<UniformRow> ClosedFormLayout::generator_rows() const {
    const auto& ctx = shape.ctx();
    const auto m = width();
    const auto rest = m - k0 - k1;
    std::vector<UniformRow> out;
    auto place = [&](const UniformRow& layout_row) {
        UniformRow row(m, RElem::zero(ctx));
        for (std::size_t l = 0; l < m; ++l) row[columns[l]] = layout_row[l];
        out.push_back(std::move(row));
    };
    for (std::size_t i = 0; i < k0; ++i) {
        UniformRow r(m, RElem::zero(ctx));
        r[i] = RElem::one(ctx);
        for (std::size_t t = 0; t < k1; ++t) r[k0 + t] = A[i][t];
        for (std::size_t t = 0; t < rest; ++t) r[k0 + k1 + t] = B[i][t];
        place(r);
    }
    for (std::size_t s = 0; s < k1; ++s) {
        UniformRow r(m, RElem::zero(ctx));
        r[k0 + s] = RElem::u(ctx);
        for (std::size_t t = 0; t < rest; ++t) r[k0 + k1 + t] = RElem::u(ctx) * D[s][t];
        place(r);
    }
    return out;
}

std::optional<ClosedFormLayout> detect_closed_form_layout(const std::vector<MixedWord>& rows, const Shape& shape) {
    const auto m = shape.alpha() + shape.beta();
    const auto& ctx = shape.ctx();
    std::vector<UniformRow> u_rows;
    for (const auto& w : rows) {
        if (!(w.shape() == shape)) return std::nullopt;
        u_rows.push_back(to_uniform(w));
    }
    if (u_rows.size() > m) return std::nullopt;
    const auto one = RElem::one(ctx);
    const auto u = RElem::u(ctx);
    std::size_t k0 = 0;
    while (k0 < u_rows.size() && u_rows[k0][k0] == one) ++k0;
    const std::size_t k1 = u_rows.size() - k0;
    const std::size_t lead = k0 + k1;
    for (std::size_t i = 0; i < u_rows.size(); ++i) {
        for (std::size_t c = 0; c < (i < k0 ? k0 : lead); ++c) {
            const auto& e = u_rows[i][c];
            RElem expected = i < k0 ? (c == i ? one : RElem::zero(ctx)) : (c == i ? u : RElem::zero(ctx));
            if (e != expected) return std::nullopt;
        }
        if (i >= k0)
            for (std::size_t c = lead; c < m; ++c)
                if (u_rows[i][c].is_unit()) return std::nullopt;
    }
    ClosedFormLayout layout{shape, k0, k1};
    layout.columns.resize(m);
    std::iota(layout.columns.begin(), layout.columns.end(), std::size_t{0});
    for (std::size_t i = 0; i < k0; ++i) {
        layout.A.emplace_back(u_rows[i].begin() + static_cast<std::ptrdiff_t>(k0), u_rows[i].begin() + static_cast<std::ptrdiff_t>(lead));
        layout.B.emplace_back(u_rows[i].begin() + static_cast<std::ptrdiff_t>(lead), u_rows[i].end());
    }
    for (std::size_t s = 0; s < k1; ++s) {
        UniformRow d;
        for (std::size_t c = lead; c < m; ++c) d.emplace_back(u_rows[k0 + s][c].b());
        layout.D.push_back(std::move(d));
    }
    return layout;
}

std::optional<ClosedFormLayout> closed_form_layout(const StandardForm& sf) {
    if (sf.kappa != 0) return std::nullopt;
    const auto& shape = sf.shape;
    const auto alpha = shape.alpha();
    for (std::size_t s = 0; s < sf.k1_u; ++s) {
        const auto& row = sf.rows[sf.k0 + s];
        if (std::any_of(row.fp_values().begin(), row.fp_values().end(), [](auto v) { return v != 0; }))
            return std::nullopt;
    }
    ClosedFormLayout layout{shape, sf.k0, sf.k1_u};
    // Layout order: R pivots (free, then u), remaining R columns, then the Z_p block.
    for (auto c : sf.r_perm) layout.columns.push_back(alpha + c);
    for (std::size_t i = 0; i < alpha; ++i) layout.columns.push_back(sf.fp_perm[i]);
    for (std::size_t i = 0; i < sf.k0; ++i) {
        const auto& row = sf.rows[i];
        UniformRow a;
        for (const auto& v : sf.A[i]) a.emplace_back(v);
        layout.A.push_back(std::move(a));
        UniformRow b(sf.B[i].begin(), sf.B[i].end());
        for (std::size_t k = 0; k < alpha; ++k) b.emplace_back(row.fp(k));
        layout.B.push_back(std::move(b));
    }
    for (std::size_t s = 0; s < sf.k1_u; ++s) {
        UniformRow d;
        for (const auto& v : sf.D[s]) d.emplace_back(v);
        for (std::size_t k = 0; k < alpha; ++k) d.push_back(RElem::zero(shape.ctx()));
        layout.D.push_back(std::move(d));
    }
    return layout;
}

ParityCheckReport parity_check_closed_form(const ClosedFormLayout& layout) {
    const auto& shape = layout.shape;
    const auto& ctx = shape.ctx();
    const auto m = layout.width();
    const auto k0 = layout.k0, k1 = layout.k1;
    const auto rest = m - k0 - k1;
    const auto u = RElem::u(ctx);

    std::vector<UniformRow> h_layout;
    for (std::size_t t = 0; t < rest; ++t) {
        UniformRow h(m, RElem::zero(ctx));
        for (std::size_t i = 0; i < k0; ++i) {
            RElem v = -layout.B[i][t];
            for (std::size_t s = 0; s < k1; ++s) v = v + layout.D[s][t] * layout.A[i][s];
            h[i] = v;
        }
        for (std::size_t s = 0; s < k1; ++s) h[k0 + s] = -layout.D[s][t];
        h[k0 + k1 + t] = RElem::one(ctx);
        h_layout.push_back(std::move(h));
    }
    for (std::size_t s = 0; s < k1; ++s) {
        UniformRow h(m, RElem::zero(ctx));
        for (std::size_t i = 0; i < k0; ++i) h[i] = u * layout.A[i][s];
        h[k0 + s] = -u;
        h_layout.push_back(std::move(h));
    }

    ParityCheckReport report{shape};
    report.g_rows = layout.generator_rows();
    for (const auto& hl : h_layout) {
        UniformRow row(m, RElem::zero(ctx));
        for (std::size_t l = 0; l < m; ++l) row[layout.columns[l]] = hl[l];
        report.h_rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < report.h_rows.size(); ++i) {
        for (std::size_t c = 0; c < shape.alpha(); ++c)
            if (!report.h_rows[i][c].is_pure()) report.ill_typed.push_back({i, c, report.h_rows[i][c]});
        std::vector<RElem> products;
        for (std::size_t j = 0; j < report.g_rows.size(); ++j) {
            auto v = uniform_inner_product(report.h_rows[i], report.g_rows[j], shape);
            if (!v.is_zero()) report.non_orthogonal.emplace_back(i, j);
            products.push_back(v);
        }
        report.products.push_back(std::move(products));
    }
    return report;
}

void check_against_dual(ParityCheckReport& report, const CodewordSet& dual) {
    report.in_dual.clear();
    for (const auto& h : report.h_rows) {
        if (!is_well_typed(h, report.shape)) {
            report.in_dual.emplace_back(false);
            continue;
        }
        report.in_dual.emplace_back(dual.contains(from_uniform(h, report.shape)));
    }
}

std::size_t min_distance(const AdditiveCode& code, Metric metric, std::uint64_t budget) {
    auto set = enumerate(code, budget);
    if (set.size() < 2) throw Undefined("minimum distance of the zero code");
    std::size_t best = code.shape().n() + 1;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set.keys()[i] == 0) continue;
        auto w = set.word(i);
        auto weight = metric == Metric::Gray ? gray_weight(w) : hamming_weight(phi(w));
        best = std::min(best, weight);
    }
    return best;
}

} // namespace zpu
