#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cauchon/cgl.hpp"
#include "cauchon/counting.hpp"
#include "cauchon/diagram.hpp"
#include "cauchon/error.hpp"
#include "cauchon/strata.hpp"
#include "cauchon/weyl.hpp"

namespace cauchon::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "text";
    unsigned jobs = 1;
    std::uint64_t cap = EnumerationOptions{}.cap;
    int precision = 6;
    bool exact = false;
    bool show_matrix = false;

    int digits() const { return exact ? -1 : precision; }
    EnumerationOptions enumeration() const { return {jobs, cap}; }
};

struct Io {
    std::ostream& out;
    std::istream& in;
};

unsigned default_jobs() {
    const char* env = std::getenv("CAUCHON_JOBS");
    if (!env || !*env)
        return 1;
    unsigned v = 0;
    const std::string_view s(env);
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || v == 0)
        throw UsageError("CAUCHON_JOBS must be a positive integer");
    return v;
}

Json integer_json(const Integer& x) {
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(integer_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(integer_json(x));
    return out;
}

std::string render(const Rational& q, int digits) {
    return digits < 0 ? q.get_str() : to_decimal(q, digits);
}

void emit_json(std::ostream& out, Json body) {
    Json j;
    j["schema"] = 1;
    for (auto& [k, v] : body.items())
        j[k] = std::move(v);
    out << j.dump(2) << '\n';
}

template <class F>
auto with_input(const std::string& path, std::istream& stdin_stream, F&& f) {
    if (path == "-")
        return f(stdin_stream);
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open " + path);
    return f(file);
}

Grid load_grid(const std::string& path, std::istream& in) {
    return with_input(path, in, [](std::istream& s) { return read_grid(s); });
}

CauchonDiagram load_diagram(const std::string& path, std::istream& in) {
    return CauchonDiagram::from_grid(load_grid(path, in));
}

std::string box_text(Box b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

std::string join(const std::vector<std::size_t>& xs, char sep) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k)
            s += sep;
        s += std::to_string(xs[k]);
    }
    return s;
}

void check_cap(int m, int n, std::uint64_t cap) {
    const Integer total = diagram_count(m, n);
    if (total > Integer(std::to_string(cap)))
        throw CapExceeded(std::to_string(m) + "x" + std::to_string(n) + " has " + total.get_str() +
                          " diagrams, above the cap of " + std::to_string(cap));
}

void check_shape(int m, int n) {
    if (m < 1 || n < 1 || n > kMaxColumns)
        throw UsageError("grid dimensions must satisfy m >= 1 and 1 <= n <= 64");
}

// validate

int cmd_validate(const Common& opt, const std::string& path, Io io) {
    const Grid g = load_grid(path, io.in);
    const auto bad = first_violation(g);
    if (opt.format == "json") {
        Json j;
        j["m"] = g.m();
        j["n"] = g.n();
        j["valid"] = !bad;
        j["violation"] = bad ? Json::array({bad->row, bad->col}) : Json(nullptr);
        emit_json(io.out, std::move(j));
    } else if (opt.format == "csv") {
        io.out << "valid,row,col\n";
        if (bad)
            io.out << "false," << bad->row << ',' << bad->col << '\n';
        else
            io.out << "true,,\n";
    } else {
        io.out << (bad ? "invalid at " + box_text(*bad) : std::string("valid")) << '\n';
    }
    return bad ? kInvalid : kOk;
}

// dim

int cmd_dim(const Common& opt, const std::string& path, bool audit, Io io) {
    const CauchonDiagram c = load_diagram(path, io.in);
    const auto report = stratum_report(c);
    std::optional<Lemma1Audit> lemma;
    if (audit)
        lemma = verify_lemma1(c);

    if (opt.format == "json") {
        Json j;
        j["m"] = c.m();
        j["n"] = c.n();
        j["white_count"] = report.white_count;
        j["stratum_dim"] = report.stratum_dim;
        if (opt.show_matrix)
            j["matrix"] = matrix_json(skew_adjacency(c).matrix());
        if (lemma) {
            Json a;
            a["passed"] = lemma->passed;
            a["failure"] = lemma->failure;
            a["offending"] = lemma->offending
                                 ? Json::array({lemma->offending->first, lemma->offending->second})
                                 : Json(nullptr);
            a["column_heads"] = lemma->column_heads;
            if (opt.show_matrix)
                a["reduced"] = matrix_json(lemma->reduced);
            j["lemma_audit"] = std::move(a);
        }
        emit_json(io.out, std::move(j));
    } else if (opt.format == "csv") {
        io.out << "m,n,white_count,stratum_dim" << (lemma ? ",lemma_audit" : "") << '\n';
        io.out << c.m() << ',' << c.n() << ',' << report.white_count << ',' << report.stratum_dim;
        if (lemma)
            io.out << ',' << (lemma->passed ? "pass" : "fail");
        io.out << '\n';
    } else {
        io.out << "d: " << report.white_count << '\n';
        if (opt.show_matrix) {
            io.out << "M(C):\n";
            write_matrix(io.out, skew_adjacency(c).matrix());
        }
        io.out << "e: " << report.stratum_dim << '\n';
        if (lemma) {
            io.out << "lemma audit: " << (lemma->passed ? "pass" : "fail");
            if (!lemma->passed) {
                io.out << " (" << lemma->failure;
                if (lemma->offending)
                    io.out << " at labels " << lemma->offending->first << ','
                           << lemma->offending->second;
                io.out << ')';
            }
            io.out << '\n';
            if (opt.show_matrix) {
                io.out << "D:\n";
                write_matrix(io.out, lemma->reduced);
            }
        }
    }
    return lemma && !lemma->passed ? kInvalid : kOk;
}

// chain

int cmd_chain(const Common& opt, const std::string& path, Io io) {
    const auto chain = build_chain(load_diagram(path, io.in));
    if (opt.format == "json") {
        Json steps = Json::array();
        for (const auto& s : chain.steps) {
            Json step;
            step["diagram"] = row_strings(s.diagram.grid());
            step["dim"] = s.dim;
            steps.push_back(std::move(step));
        }
        Json j;
        j["steps"] = std::move(steps);
        emit_json(io.out, std::move(j));
    } else if (opt.format == "csv") {
        io.out << "step,dim,rows\n";
        for (std::size_t k = 0; k < chain.steps.size(); ++k) {
            const auto rows = row_strings(chain.steps[k].diagram.grid());
            io.out << k << ',' << chain.steps[k].dim << ',';
            for (std::size_t r = 0; r < rows.size(); ++r)
                io.out << (r ? "/" : "") << rows[r];
            io.out << '\n';
        }
    } else {
        write_chain(io.out, chain);
    }
    return kOk;
}

// dist

int cmd_dist(const Common& opt, int m, int n, Io io) {
    check_shape(m, n);
    const auto dist = dim_distribution(m, n, opt.enumeration());
    const auto fraction = [&](std::uint64_t c) {
        return Rational(Integer(std::to_string(c)), Integer(std::to_string(dist.total)));
    };
    if (opt.format == "json") {
        Json counts = Json::array();
        for (const auto& [e, c] : dist.counts) {
            Json row;
            row["dim"] = e;
            row["count"] = c;
            row["fraction"] = render(fraction(c), opt.digits());
            counts.push_back(std::move(row));
        }
        Json j;
        j["m"] = m;
        j["n"] = n;
        j["total"] = dist.total;
        j["counts"] = std::move(counts);
        emit_json(io.out, std::move(j));
    } else if (opt.format == "csv") {
        write_distribution_csv(io.out, dist, opt.digits());
    } else {
        io.out << "m=" << m << " n=" << n << " total=" << dist.total << '\n';
        for (const auto& [e, c] : dist.counts)
            io.out << "e=" << e << ' ' << c << ' ' << render(fraction(c), opt.digits()) << '\n';
    }
    return kOk;
}

// count

int cmd_count(const Common& opt, int m, int n, bool enumerate, Io io) {
    if (m < 1 || n < 1)
        throw UsageError("grid dimensions must be positive");
    const Integer closed = diagram_count(m, n);
    std::optional<std::uint64_t> streamed;
    if (enumerate) {
        check_shape(m, n);
        check_cap(m, n, opt.cap);
        streamed = enumerated_count(m, n, opt.jobs);
    }
    if (opt.format == "json") {
        Json j;
        j["m"] = m;
        j["n"] = n;
        j["count"] = closed.get_str();
        if (streamed)
            j["enumerated"] = *streamed;
        emit_json(io.out, std::move(j));
    } else if (opt.format == "csv") {
        io.out << "m,n,count" << (streamed ? ",enumerated" : "") << '\n';
        io.out << m << ',' << n << ',' << closed;
        if (streamed)
            io.out << ',' << *streamed;
        io.out << '\n';
    } else {
        io.out << closed << '\n';
        if (streamed)
            io.out << "enumerated: " << *streamed << '\n';
    }
    if (streamed && Integer(std::to_string(*streamed)) != closed)
        throw std::logic_error("enumeration disagrees with the closed form");
    return kOk;
}

// conjecture

int cmd_conjecture(const Common& opt, int m, int n_max, Io io) {
    check_shape(m, n_max);
    if (n_max < m)
        throw UsageError("n_max must be at least m");
    for (int n = m; n <= n_max; ++n)
        check_cap(m, n, opt.cap);
    const auto rows = conjecture_table(m, n_max, opt.enumeration());
    const int digits = opt.digits();
    if (opt.format == "json") {
        Json out = Json::array();
        for (const auto& r : rows) {
            Json row;
            row["m"] = r.m;
            row["n"] = r.n;
            row["i"] = r.i;
            row["count"] = r.count;
            row["total"] = r.total;
            row["empirical"] = render(r.empirical, digits);
            row["limit"] = render(r.limit, digits);
            row["abs_error"] = render(r.abs_error, digits);
            out.push_back(std::move(row));
        }
        Json j;
        j["rows"] = std::move(out);
        emit_json(io.out, std::move(j));
    } else if (opt.format == "csv") {
        write_conjecture_csv(io.out, rows, digits);
    } else {
        std::vector<std::vector<std::string>> cells{
            {"m", "n", "i", "count", "total", "empirical", "limit", "abs_error"}};
        for (const auto& r : rows)
            cells.push_back({std::to_string(r.m), std::to_string(r.n), std::to_string(r.i),
                             std::to_string(r.count), std::to_string(r.total),
                             render(r.empirical, digits), render(r.limit, digits),
                             render(r.abs_error, digits)});
        std::vector<std::size_t> width(cells[0].size(), 0);
        for (const auto& row : cells)
            for (std::size_t k = 0; k < row.size(); ++k)
                width[k] = std::max(width[k], row[k].size());
        for (const auto& row : cells) {
            std::string line;
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k)
                    line += "  ";
                line += std::string(width[k] - row[k].size(), ' ') + row[k];
            }
            io.out << line << '\n';
        }
    }
    return kOk;
}

// cgl

int cmd_cgl(const Common& opt, const std::vector<std::string>& positional,
            const std::vector<int>& quantum, Io io) {
    CGLSystem sys;
    std::size_t first_index = 0;
    if (!quantum.empty()) {
        if (quantum[0] < 1 || quantum[1] < 1)
            throw UsageError("--quantum needs positive M N");
        sys = quantum_matrix_system(quantum[0], quantum[1]).system();
    } else {
        if (positional.empty())
            throw UsageError("cgl needs a system file or --quantum M N");
        sys = with_input(positional[0], io.in, [](std::istream& s) { return read_cgl_system(s); });
        first_index = 1;
    }
    std::string subset_text;
    for (std::size_t k = first_index; k < positional.size(); ++k)
        subset_text += positional[k] + " ";
    const ComplementSet w = parse_subset(subset_text, sys.size());
    const auto sub = stratum_matrix(sys, w);
    const std::size_t dim = kernel_dim(sub);

    if (opt.format == "json") {
        Json j;
        j["size"] = sys.size();
        j["w"] = w.members();
        j["complement"] = w.complement();
        j["stratum_dim"] = dim;
        if (opt.show_matrix)
            j["matrix"] = matrix_json(sub.matrix());
        emit_json(io.out, std::move(j));
    } else if (opt.format == "csv") {
        io.out << "size,w,complement,stratum_dim\n";
        io.out << sys.size() << ',' << join(w.members(), ' ') << ',' << join(w.complement(), ' ')
               << ',' << dim << '\n';
    } else {
        std::vector<std::size_t> members = w.members();
        std::sort(members.begin(), members.end());
        io.out << "N: " << sys.size() << '\n';
        io.out << "w: " << join(members, ' ') << '\n';
        io.out << "complement: " << join(w.complement(), ' ') << '\n';
        if (opt.show_matrix) {
            io.out << "matrix:\n";
            write_matrix(io.out, sub.matrix());
        }
        io.out << "dim: " << dim << '\n';
    }
    return kOk;
}

// weyl

int cmd_weyl(const Common& opt, const std::string& type, const std::string& word_text,
             const std::vector<int>& quantum, Io io) {
    const auto rs = RootSystemData::parse(type);
    const WeylWord w = parse_word(word_text);
    for (int letter : w)
        if (letter < 1 || letter > rs.rank)
            throw std::invalid_argument("letter " + std::to_string(letter) + " outside 1.." +
                                        std::to_string(rs.rank));
    if (!is_reduced(rs, w))
        throw std::invalid_argument("word " + format_word(w) + " is not reduced in " + rs.name());

    const auto betas = beta_roots(rs, w);
    const auto matrix = schubert_cgl_matrix(rs, w);
    const std::size_t via_matrix = kernel_dim(matrix);
    const std::size_t zero = zero_stratum_dim(rs, w);

    std::optional<std::size_t> diagram_dim;
    if (!quantum.empty()) {
        if (quantum[0] < 1 || quantum[1] < 1)
            throw UsageError("--quantum needs positive M N");
        if (rs.type != 'A' || rs.rank != quantum[0] + quantum[1] - 1)
            throw UsageError("--quantum M N needs type A" +
                             std::to_string(quantum[0] + quantum[1] - 1));
        diagram_dim = stratum_dim(CauchonDiagram::all_white(quantum[0], quantum[1]));
    }
    const bool agree = via_matrix == zero && (!diagram_dim || *diagram_dim == zero);

    if (opt.format == "json") {
        Json j;
        j["type"] = rs.name();
        j["word"] = w;
        j["length"] = w.size();
        Json bs = Json::array();
        for (const auto& b : betas)
            bs.push_back(vector_json(b));
        j["betas"] = std::move(bs);
        if (opt.show_matrix)
            j["matrix"] = matrix_json(matrix.matrix());
        j["kernel_dim"] = via_matrix;
        j["zero_stratum_dim"] = zero;
        if (diagram_dim) {
            j["quantum"] = {{"m", quantum[0]}, {"n", quantum[1]}, {"stratum_dim", *diagram_dim},
                            {"match", *diagram_dim == zero}};
        }
        emit_json(io.out, std::move(j));
    } else if (opt.format == "csv") {
        io.out << "type,word,length,kernel_dim,zero_stratum_dim" << (diagram_dim ? ",quantum_dim" : "")
               << '\n';
        io.out << rs.name() << ",\"" << format_word(w) << "\"," << w.size() << ',' << via_matrix
               << ',' << zero;
        if (diagram_dim)
            io.out << ',' << *diagram_dim;
        io.out << '\n';
    } else {
        io.out << "type: " << rs.name() << '\n';
        io.out << "word: " << format_word(w) << '\n';
        io.out << "length: " << w.size() << '\n';
        for (std::size_t k = 0; k < betas.size(); ++k) {
            io.out << "beta_" << k + 1 << ":";
            for (const auto& x : betas[k])
                io.out << ' ' << x;
            io.out << '\n';
        }
        if (opt.show_matrix) {
            io.out << "matrix:\n";
            write_matrix(io.out, matrix.matrix());
        }
        io.out << "kernel dim: " << via_matrix << '\n';
        io.out << "zero-stratum dim: " << zero << '\n';
        if (diagram_dim)
            io.out << "quantum " << quantum[0] << 'x' << quantum[1] << ": stratum dim "
                   << *diagram_dim << (*diagram_dim == zero ? " (match)" : " (mismatch)") << '\n';
    }
    return agree ? kOk : kInvalid;
}

void add_common(CLI::App& sub, Common& opt, bool enumeration) {
    sub.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub.add_option("--precision", opt.precision, "Decimal digits for fractions")
        ->check(CLI::Range(0, 60));
    sub.add_flag("--exact", opt.exact, "Print fractions as p/q");
    if (enumeration) {
        sub.add_option("--jobs", opt.jobs, "Worker threads (default: $CAUCHON_JOBS or 1)")
            ->check(CLI::PositiveNumber);
        sub.add_option("--cap", opt.cap, "Refuse to enumerate more diagrams than this")
            ->check(CLI::PositiveNumber);
    }
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
    Common opt;
    CLI::App app{"Dimensions of torus-invariant strata in quantum matrices and CGL extensions",
                 "cauchon"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cauchon 0.1.0");

    std::string path = "-";
    bool audit = false;
    bool enumerate = false;
    int m = 0, n = 0;
    std::vector<std::string> positional;
    std::vector<int> quantum;
    std::string type, word;

    auto* validate = app.add_subcommand("validate", "Check a grid against the diagram rule");
    validate->add_option("file", path, "Grid file, '-' for stdin");
    add_common(*validate, opt, false);

    auto* dim = app.add_subcommand("dim", "White count and stratum dimension of a diagram");
    dim->add_option("file", path, "Diagram file, '-' for stdin");
    dim->add_flag("--show-matrix", opt.show_matrix, "Print M(C)");
    dim->add_flag("--audit", audit, "Run the lemma audit on S*M(C)");
    add_common(*dim, opt, false);

    auto* chain = app.add_subcommand("chain", "Chain of diagrams down to dimension 0");
    chain->add_option("file", path, "Diagram file, '-' for stdin");
    add_common(*chain, opt, false);

    auto* dist = app.add_subcommand("dist", "Histogram of stratum dimensions over all m x n diagrams");
    dist->add_option("m", m)->required();
    dist->add_option("n", n)->required();
    add_common(*dist, opt, true);

    auto* count = app.add_subcommand("count", "Number of m x n diagrams");
    count->add_option("m", m)->required();
    count->add_option("n", n)->required();
    count->add_flag("--enumerate", enumerate, "Also count by streaming enumeration");
    add_common(*count, opt, true);

    auto* conj = app.add_subcommand("conjecture", "Empirical vs limiting dimension fractions");
    conj->add_option("m", m)->required();
    conj->add_option("n_max", n)->required();
    add_common(*conj, opt, true);

    auto* cgl = app.add_subcommand("cgl", "Stratum dimension of a CGL system for a subset w");
    cgl->add_option("args", positional, "System file ('-' for stdin) then indices of w");
    cgl->add_option("--quantum", quantum, "Use the quantum matrix system of size M N")
        ->expected(2)
        ->allow_extra_args(false);
    cgl->add_flag("--show-matrix", opt.show_matrix, "Print the stratum matrix");
    add_common(*cgl, opt, false);

    auto* weyl = app.add_subcommand("weyl", "Roots, pairing matrix and zero-stratum dimension");
    weyl->add_option("type", type, "Root system, e.g. A3")->required();
    weyl->add_option("word", word, "Reduced word, e.g. 1,2,1");
    weyl->add_option("--quantum", quantum, "Compare with the all-white M x N diagram")->expected(2)
        ->allow_extra_args(false);
    weyl->add_flag("--show-matrix", opt.show_matrix, "Print the pairing matrix");
    add_common(*weyl, opt, false);

    try {
        opt.jobs = default_jobs();
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << "cauchon 0.1.0\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }

    const Io io{out, in};
    try {
        if (*validate)
            return cmd_validate(opt, path, io);
        if (*dim)
            return cmd_dim(opt, path, audit, io);
        if (*chain)
            return cmd_chain(opt, path, io);
        if (*dist)
            return cmd_dist(opt, m, n, io);
        if (*count)
            return cmd_count(opt, m, n, enumerate, io);
        if (*conj)
            return cmd_conjecture(opt, m, n, io);
        if (*cgl)
            return cmd_cgl(opt, positional, quantum, io);
        if (*weyl)
            return cmd_weyl(opt, type, word, quantum, io);
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kError;
    }
    return kError;
}

} // namespace cauchon::cli
