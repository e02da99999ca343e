#include "zpzpu/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace zpu {

std::string format(const Diagnostic& d) {
    return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
}

namespace {

std::string join(const std::vector<Diagnostic>& ds) {
    std::string out;
    for (const auto& d : ds) {
        if (!out.empty()) out += "\n";
        out += format(d);
    }
    return out;
}

std::string_view trim(std::string_view s, std::size_t& lead) {
    lead = s.find_first_not_of(" \t\r");
    if (lead == std::string_view::npos) {
        lead = s.size();
        return {};
    }
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(lead, last - lead + 1);
}

struct Collector {
    std::vector<Diagnostic> list;
    void add(std::size_t line, std::size_t column, std::string message) {
        if (list.size() < SpecParseError::max_diagnostics) list.push_back({line, column, std::move(message)});
    }
};

} // namespace

SpecParseError::SpecParseError(std::vector<Diagnostic> diagnostics)
    : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

CodeSpecDocument parse_code_spec(std::string_view text) {
    Collector diag;
    std::vector<std::string> comments;
    std::optional<std::uint64_t> p, alpha, beta;
    std::optional<Shape> shape;
    std::vector<MixedWord> rows;
    bool leading = true, in_rows = false;

    std::size_t line_no = 0, pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::size_t lead = 0;
        auto line = trim(raw, lead);
        if (!line.empty() && line.front() == '#') {
            if (leading) comments.emplace_back(raw);
            continue;
        }
        if (line.empty()) continue;
        leading = false;

        if (in_rows) {
            if (!shape) continue;
            try {
                rows.push_back(parse_word(line, *shape));
            } catch (const WordError& e) {
                diag.add(line_no, lead + e.column() + 1, e.message());
            }
            continue;
        }
        if (line == "rows:") {
            in_rows = true;
            for (auto [key, value] : {std::pair{"p", &p}, std::pair{"alpha", &alpha}, std::pair{"beta", &beta}})
                if (!*value) diag.add(line_no, 1, std::string("missing header '") + key + "'");
            if (p && alpha && beta) {
                try {
                    shape.emplace(PrimeCtx(*p), *alpha, *beta);
                } catch (const NotPrime&) {
                    // reported where p was read
                } catch (const Error& e) {
                    diag.add(line_no, 1, e.what());
                }
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            diag.add(line_no, lead + 1, "unknown token");
            continue;
        }
        std::size_t unused = 0, vlead = 0;
        auto key = trim(line.substr(0, eq), unused);
        auto value = trim(line.substr(eq + 1), vlead);
        std::size_t vcol = lead + eq + 1 + vlead + 1;
        std::optional<std::uint64_t>* slot = key == "p" ? &p : key == "alpha" ? &alpha : key == "beta" ? &beta : nullptr;
        if (!slot) {
            diag.add(line_no, lead + 1, "unknown token");
            continue;
        }
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
            diag.add(line_no, vcol, "unknown token");
            continue;
        }
        if (slot == &p && (v > PrimeCtx::max_modulus || !is_prime(v))) {
            diag.add(line_no, vcol, "p = " + std::string(value) + " is not prime");
            continue;
        }
        *slot = v;
    }
    if (!in_rows) diag.add(line_no + 1, 1, "missing 'rows:'");
    if (!diag.list.empty()) throw SpecParseError(std::move(diag.list));
    return {std::move(comments), *shape, std::move(rows)};
}

std::string print_code_spec(const CodeSpecDocument& doc) {
    std::ostringstream out;
    for (const auto& c : doc.comments) out << c << "\n";
    out << "p = " << doc.shape.p() << "\n"
        << "alpha = " << doc.shape.alpha() << "\n"
        << "beta = " << doc.shape.beta() << "\n"
        << "rows:\n";
    for (const auto& r : doc.rows) out << format(r) << "\n";
    return out.str();
}

CodeSpecDocument load_code_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecParseError({{0, 0, "cannot open " + path}});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_spec(buf.str());
}

} // namespace zpu
