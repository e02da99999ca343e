// zpzpu: command-line workbench for additive codes over Z_p^alpha x (Z_p + uZ_p)^beta.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>

#include "zpzpu/cyclic.hpp"
#include "zpzpu/gray.hpp"
#include "zpzpu/parallel.hpp"
#include "zpzpu/spec_file.hpp"
#include "zpzpu/verify.hpp"

namespace {

using nlohmann::json;
using namespace zpu;

// All output is buffered here and written once the verb has finished.
class Output {
public:
    explicit Output(bool lines) : lines_(lines) {}

    void kv(const std::string& key, const std::string& value) {
        if (lines_) {
            emit(json{{"key", key}, {"value", value}});
        } else {
            text_ << key << ": " << value << "\n";
        }
    }
    void check(const std::string& name, const std::string& status, const std::string& detail) {
        if (lines_) {
            emit(json{{"check", name}, {"status", status}, {"detail", detail}});
        } else {
            text_ << "[" << status << "] " << name << ": " << detail << "\n";
        }
    }
    void record(const json& obj, const std::string& text) {
        if (lines_) {
            emit(obj);
        } else {
            text_ << text << "\n";
        }
    }
    std::string str() const { return text_.str(); }

private:
    void emit(const json& obj) { text_ << obj.dump() << "\n"; }

    bool lines_;
    std::ostringstream text_;
};

struct Globals {
    std::string format = "text";
    std::uint64_t budget = default_budget;
    std::size_t threads = 1;
};

std::string format_row(const UniformRow& row) {
    std::string out = "(";
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? ", " : "") + format(row[i]);
    return out + ")";
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

void describe_code(Output& out, const AdditiveCode& code, std::uint64_t budget) {
    out.kv("shape", format(code.shape()));
    out.kv("type", format(standard_form(code).type()));
    out.kv("size", std::to_string(enumerate(code, budget).size()));
}

int cmd_reduce(Output& out, const CodeSpecDocument& doc, const Globals& g) {
    auto code = doc.code();
    auto sf = standard_form(code);
    out.kv("shape", format(code.shape()));
    out.kv("type", format(sf.type()));
    out.kv("k0", std::to_string(sf.k0));
    out.kv("k1", std::to_string(sf.k1()));
    out.kv("kappa", std::to_string(sf.kappa));
    out.kv("fp_perm", join(sf.fp_perm));
    out.kv("r_perm", join(sf.r_perm));
    for (const auto& r : sf.rows) out.kv("row", format(r));
    for (const auto& r : sf.rows_in_input_order()) out.kv("input_order_row", format(r));
    for (const auto& n : sf.notes) out.kv("note", n);
    bool same = enumerate(sf.reassembled(), g.budget) == enumerate(code, g.budget);
    out.kv("size", std::to_string(enumerate(code, g.budget).size()));
    out.kv("preserved", same ? "PASS" : "FAIL");
    return same ? 0 : 1;
}

int cmd_dual(Output& out, const CodeSpecDocument& doc, const std::string& method, const Globals& g) {
    auto code = doc.code();
    bool oracle = method != "formula", formula = method != "oracle";
    std::optional<CodewordSet> dual_set;
    int rc = 0;
    if (oracle) {
        auto dual = dual_oracle(code, DualStrategy::Nullspace, g.budget);
        auto sf = standard_form(dual);
        dual_set = enumerate(dual, g.budget);
        out.kv("dual_type", format(sf.type()));
        out.kv("dual_size", std::to_string(dual_set->size()));
        for (const auto& r : sf.rows_in_input_order()) out.kv("dual_row", format(r));
        auto product = static_cast<unsigned __int128>(enumerate(code, g.budget).size()) * dual_set->size();
        bool ok = product == saturating_pow(code.shape().p(), code.shape().n());
        out.kv("size_duality", ok ? "PASS" : "FAIL");
        if (!ok) rc = 1;
    }
    if (formula) {
        auto layout = detect_closed_form_layout(code.generators(), code.shape());
        if (!layout) layout = closed_form_layout(standard_form(code));
        if (!layout) {
            out.kv("formula", "N/A");
            return rc;
        }
        auto report = parity_check_closed_form(*layout);
        for (const auto& h : report.h_rows) out.kv("h_row", format_row(h));
        for (const auto& e : report.ill_typed)
            out.kv("ill_typed", "H row " + std::to_string(e.row + 1) + " column " + std::to_string(e.column + 1) +
                                    ": " + format(e.entry));
        for (auto [h, gi] : report.non_orthogonal)
            out.kv("non_orthogonal", "H row " + std::to_string(h + 1) + " . G row " + std::to_string(gi + 1) + " = " +
                                         format(report.products[h][gi]));
        out.kv("orthogonality", report.all_orthogonal() ? "PASS" : "DISCREPANCY-DOCUMENTED");
        if (dual_set) {
            check_against_dual(report, *dual_set);
            for (std::size_t i = 0; i < report.in_dual.size(); ++i)
                out.kv("h_row_in_dual", std::to_string(i + 1) + " " + (report.in_dual[i].value_or(false) ? "yes" : "no"));
        }
    }
    return rc;
}

int cmd_enumerate(Output& out, const CodeSpecDocument& doc, std::uint64_t limit, const Globals& g) {
    auto set = enumerate(doc.code(), g.budget);
    out.kv("size", std::to_string(set.size()));
    for (std::size_t i = 0; i < set.size() && i < limit; ++i) out.kv("word", format(set.word(i)));
    return 0;
}

int cmd_weights(Output& out, const CodeSpecDocument& doc, const std::string& weight, const Globals& g) {
    auto we = weight_enumerator(doc.code(), weight == "paper" ? WeightKind::CaseTable : WeightKind::Gray, g.budget);
    out.kv("weight", weight);
    out.kv("A", format_coefficients(we));
    out.kv("W", format_polynomial(we));
    return 0;
}

int cmd_macwilliams(Output& out, const CodeSpecDocument& doc, const Globals& g) {
    auto code = doc.code();
    auto dual = dual_oracle(code, DualStrategy::Nullspace, g.budget);
    auto we = weight_enumerator(code, WeightKind::Gray, g.budget);
    auto dual_we = weight_enumerator(dual, WeightKind::Gray, g.budget);
    out.kv("A", format_coefficients(we));
    out.kv("A_dual", format_coefficients(dual_we));
    auto transform = macwilliams_transform(we, code.shape().p(), we.total());
    out.kv("A_transform", transform ? format_coefficients(*transform) : "not integral");
    auto report = macwilliams_check(code, g.budget);
    auto status = [](const ClauseResult& c, const char* otherwise) { return c.pass ? "PASS" : otherwise; };
    out.check("clause (i)", status(report.weight_identity, "DISCREPANCY-DOCUMENTED"), report.weight_identity.detail);
    out.check("clause (ii)", status(report.gray_image_identity, "FAIL"), report.gray_image_identity.detail);
    out.check("clause (iii)", status(report.gray_image_dual, "DISCREPANCY-DOCUMENTED"), report.gray_image_dual.detail);
    return report.gray_image_identity.pass ? 0 : 1;
}

int cmd_distance(Output& out, const CodeSpecDocument& doc, const Globals& g) {
    auto code = doc.code();
    try {
        auto dg = min_distance(code, Metric::Gray, g.budget);
        auto dh = min_distance(code, Metric::HammingOfGrayImage, g.budget);
        out.kv("d_G", std::to_string(dg));
        out.kv("d_H(Phi)", std::to_string(dh));
        return dg == dh ? 0 : 1;
    } catch (const Undefined&) {
        out.kv("d_G", "undefined");
        out.kv("d_H(Phi)", "undefined");
        return 0;
    }
}

void report_conditions(Output& out, const ConditionReport& report) {
    out.kv("category", std::to_string(report.category));
    for (const auto& c : report.conditions) out.check(c.name, format(c.status), c.detail);
}

struct BuildArgs {
    std::uint64_t p = 0;
    std::size_t alpha = 0, beta = 0;
    std::string f = "0", h1 = "0", g = "0", pp = "0", qq = "0", h2 = "0", output;
};

int cmd_cyclic_build(Output& out, const BuildArgs& a, const Globals& glob) {
    PrimeCtx ctx(a.p);
    Shape shape(ctx, a.alpha, a.beta);
    auto poly = [&](const std::string& s) { return parse_fp_poly(s, ctx); };
    auto gen = CyclicGenerators::make(shape, poly(a.f), poly(a.h1), poly(a.g), poly(a.pp), poly(a.qq), poly(a.h2));
    auto build = cyclic_from_generators(gen, glob.budget);
    out.kv("f", format(gen.f));
    out.kv("h1", format(gen.h1));
    out.kv("g+up", format(gen.gp));
    out.kv("h2", format(gen.h2));
    out.kv("uq", format(gen.uq));
    report_conditions(out, build.report);
    describe_code(out, build.code, glob.budget);
    bool cyclic = is_cyclic(build.code, glob.budget);
    out.kv("cyclic", cyclic ? "PASS" : "FAIL");
    auto sf = standard_form(build.code);
    CodeSpecDocument doc{{"# f = " + format(gen.f) + "; h1 = " + format(gen.h1) + "; g + u p = " + format(gen.gp) +
                          "; h2 = " + format(gen.h2) + "; u q = " + format(gen.uq)},
                         shape,
                         sf.rows_in_input_order()};
    if (!a.output.empty()) {
        std::ofstream file(a.output, std::ios::binary);
        if (!file) throw Error("cannot write " + a.output);
        file << print_code_spec(doc);
        out.kv("written", a.output);
    }
    for (const auto& r : doc.rows) out.kv("row", format(r));
    return cyclic ? 0 : 1;
}

int cmd_cyclic_check(Output& out, const CodeSpecDocument& doc, const Globals& g) {
    auto code = doc.code();
    bool cyclic = is_cyclic(code, g.budget);
    out.kv("cyclic", cyclic ? "PASS" : "FAIL");
    if (!cyclic) return 1;
    auto gen = cyclic_presentation(code, g.budget);
    out.kv("f", format(gen.f));
    out.kv("h1", format(gen.h1));
    out.kv("g+up", format(gen.gp));
    out.kv("h2", format(gen.h2));
    out.kv("uq", format(gen.uq));
    auto rebuilt = cyclic_from_generators(gen, g.budget);
    report_conditions(out, rebuilt.report);
    bool round_trip = enumerate(rebuilt.code, g.budget) == enumerate(code, g.budget);
    out.kv("round_trip", round_trip ? "PASS" : "FAIL");
    auto dual = dual_cyclicity_check(code, g.budget);
    out.kv("dual_cyclic", dual.dual_cyclic ? "PASS" : "DISCREPANCY-DOCUMENTED");
    return round_trip ? 0 : 1;
}

int cmd_verify(Output& out, const CodeSpecDocument& doc, const Globals& g) {
    auto code = doc.code();
    out.kv("shape", format(code.shape()));
    auto ledger = verify(code, g.budget);
    for (const auto& e : ledger.entries) out.check(e.name, format(e.status), e.detail);
    return ledger.exit_code();
}

int cmd_sweep(Output& out, std::uint64_t p, std::size_t alpha, std::size_t beta, const Globals& g) {
    Shape shape(PrimeCtx(p), alpha, beta);
    auto rows = cyclic_sweep(shape, g.budget);
    int rc = 0;
    for (const auto& r : rows) {
        auto pf = [](const FpPoly& x) { return format(x, true); };
        json obj{{"alpha", alpha},
                 {"beta", beta},
                 {"f", pf(r.gen.f)},
                 {"h1", pf(r.gen.h1)},
                 {"g", pf(r.gen.g())},
                 {"p", pf(r.gen.p())},
                 {"q", pf(r.gen.q())},
                 {"h2", pf(r.gen.h2)},
                 {"type", format(r.type)},
                 {"dmin", r.dmin ? json(*r.dmin) : json(nullptr)},
                 {"cyclic", r.cyclic},
                 {"cyclic_dual", r.dual_cyclic},
                 {"gray_shift", {r.gray_shift.full_interleaved, r.gray_shift.full_blockwise, r.gray_shift.block_shift}},
                 {"round_trip", r.round_trip}};
        out.record(obj, format(r));
        if (!r.cyclic || !r.round_trip || !r.gray_shift.block_shift) rc = 1;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Additive codes over Z_p^alpha x (Z_p + uZ_p)^beta"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "text or lines")->check(CLI::IsMember({"text", "lines"}));
    app.add_option("--budget", g.budget, "largest set any enumeration may build");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);

    std::string path, method = "oracle", weight = "gray";
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    auto with_file = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("file", path, "code-spec file")->required();
        return sub;
    };
    auto* reduce = with_file("reduce", "standard form");
    auto* dual = with_file("dual", "dual code");
    dual->add_option("--method", method)->check(CLI::IsMember({"oracle", "formula", "both"}));
    auto* enumerate_cmd = with_file("enumerate", "list codewords");
    enumerate_cmd->add_option("--limit", limit);
    auto* weights = with_file("weights", "weight enumerator");
    weights->add_option("--weight", weight)->check(CLI::IsMember({"gray", "paper"}));
    auto* macwilliams = with_file("macwilliams", "MacWilliams identities");
    auto* distance = with_file("distance", "minimum distance");
    auto* cyclic_check = with_file("cyclic-check", "shift closure and generator presentation");
    auto* verify_cmd = with_file("verify", "full verification ledger");

    BuildArgs b;
    auto* build = app.add_subcommand("cyclic-build", "code from cyclic generator polynomials");
    build->fallthrough();
    build->add_option("--p", b.p)->required();
    build->add_option("--alpha", b.alpha)->required();
    build->add_option("--beta", b.beta)->required();
    build->add_option("--f", b.f);
    build->add_option("--h1", b.h1);
    build->add_option("--g", b.g);
    build->add_option("--pp", b.pp);
    build->add_option("--qq", b.qq);
    build->add_option("--h2", b.h2);
    build->add_option("--output", b.output, "write the code as a spec file");

    std::uint64_t sweep_p = 0;
    std::size_t sweep_alpha = 0, sweep_beta = 0;
    auto* sweep = app.add_subcommand("sweep", "cyclic codes from divisors of x^n - 1");
    sweep->fallthrough();
    sweep->add_option("--p", sweep_p)->required();
    sweep->add_option("--alpha", sweep_alpha)->required();
    sweep->add_option("--beta", sweep_beta)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    set_thread_count(g.threads);
    Output out(g.format == "lines");
    int rc = 0;
    try {
        if (build->parsed()) {
            rc = cmd_cyclic_build(out, b, g);
        } else if (sweep->parsed()) {
            rc = cmd_sweep(out, sweep_p, sweep_alpha, sweep_beta, g);
        } else {
            auto doc = load_code_spec(path);
            if (reduce->parsed()) rc = cmd_reduce(out, doc, g);
            if (dual->parsed()) rc = cmd_dual(out, doc, method, g);
            if (enumerate_cmd->parsed()) rc = cmd_enumerate(out, doc, limit, g);
            if (weights->parsed()) rc = cmd_weights(out, doc, weight, g);
            if (macwilliams->parsed()) rc = cmd_macwilliams(out, doc, g);
            if (distance->parsed()) rc = cmd_distance(out, doc, g);
            if (cyclic_check->parsed()) rc = cmd_cyclic_check(out, doc, g);
            if (verify_cmd->parsed()) rc = cmd_verify(out, doc, g);
        }
    } catch (const SpecParseError& e) {
        std::cout << out.str();
        for (const auto& d : e.diagnostics()) std::cerr << path << ":" << format(d) << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        out.check("budget", "SKIPPED(budget)", e.what());
        std::cout << out.str();
        return 0;
    } catch (const Error& e) {
        std::cout << out.str();
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << out.str();
    return rc;
}
