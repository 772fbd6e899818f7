#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdrc/codefile.hpp"
#include "fdrc/constructions.hpp"
#include "fdrc/gabidulin.hpp"
#include "fdrc/verify.hpp"

namespace {

using namespace fdrc;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
    if (!out) throw Error("cannot write '" + path + "'");
}

bool json_path(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

FieldPtr field_from_q(std::uint64_t q) {
    if (q < 2 || q > 0xffffffffull) throw PreconditionError("q must be a prime power in [2, 2^32)");
    for (std::uint64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            std::uint32_t e = 0;
            std::uint64_t t = q;
            while (t % p == 0) {
                t /= p;
                ++e;
            }
            if (t != 1) throw PreconditionError("q must be a prime power");
            return Field::gf(static_cast<std::uint32_t>(p), e);
        }
    return Field::gf(static_cast<std::uint32_t>(q), 1);
}

FerrersDiagram load_diagram(const std::string& path) {
    return FerrersDiagram::parse(read_file(path));
}

FerrersCode load_code(const std::string& path) {
    const std::string text = read_file(path);
    return json_path(path) ? code_from_json(text) : parse_code(text);
}

struct BoundArgs {
    std::string diagram_file;
    std::size_t delta = 1;
    bool json = false;
};

int run_bound(const BoundArgs& a) {
    const auto f = load_diagram(a.diagram_file);
    const auto ub = f.upper_bound(a.delta);
    if (a.json) {
        auto j = nlohmann::json::parse(diagram_json(f));
        j["delta"] = a.delta;
        j["bound"] = ub.value;
        j["rows_removed"] = ub.argmin;
        j["minimizers"] = ub.argmins;
        j["nu"] = ub.nus;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "bound " << ub.value << "\n";
    std::cout << "rows-removed " << ub.argmin << "\n";
    std::cout << "minimizers";
    for (auto i : ub.argmins) std::cout << " " << i;
    std::cout << "\nnu";
    for (auto v : ub.nus) std::cout << " " << v;
    std::cout << "\n";
    return 0;
}

struct ConstructArgs {
    std::string diagram_file, method = "auto", out, left, right;
    std::size_t delta = 0;
    std::uint64_t q = 0;
    std::size_t filler_rows = 0, filler_cols = 0, ell = 0;
    bool json = false;
};

int run_construct(const ConstructArgs& a) {
    const auto f = load_diagram(a.diagram_file);
    const auto base = field_from_q(a.q);
    std::vector<std::string> notes;
    FerrersCode code = [&] {
        if (a.method == "es") return construct_es(f, a.delta, base);
        if (a.method == "mds") return construct_mds_diagonals(f, a.delta, base);
        if (a.method == "subcode") return construct_subcode(f, a.delta, base);
        if (a.method == "square3") {
            if (a.delta != 3) throw PreconditionError("square3 builds distance 3 codes; use --delta 3");
            return construct_square_delta3(f, base);
        }
        if (a.method == "combine4" || a.method == "combine5") {
            if (a.left.empty() || a.right.empty())
                throw PreconditionError(a.method + " needs --left and --right code files");
            const auto c1 = load_code(a.left);
            const auto c2 = load_code(a.right);
            auto c = a.method == "combine4"
                         ? combine_same_dimension(c1, c2, a.filler_rows, a.filler_cols)
                         : combine_same_distance(c1, c2, a.ell);
            if (c.diagram != f)
                throw PreconditionError("the combined diagram is " + c.diagram.render_compact() +
                                        ", not the requested shape");
            if (c.delta != a.delta)
                throw PreconditionError("the combined distance is " + std::to_string(c.delta) +
                                        ", not the requested one");
            if (!c.field->same(*base)) throw PreconditionError("--q does not match the input codes");
            return c;
        }
        auto res = auto_construct(f, a.delta, base);
        notes = std::move(res.notes);
        return std::move(res.code);
    }();

    const std::size_t bound =
        a.delta <= f.cols() ? f.upper_bound(a.delta).value : 0;
    const bool optimal = code.dimension() == bound;

    if (!a.out.empty()) write_file(a.out, json_path(a.out) ? code_json(code) : render_code(code));

    if (a.json) {
        nlohmann::json j;
        j["gamma"] = f.gamma();
        j["q"] = base->size();
        j["delta"] = a.delta;
        j["method"] = a.method;
        j["k"] = code.dimension();
        j["bound"] = bound;
        j["optimal"] = optimal;
        j["provenance"] = code.provenance;
        if (!notes.empty()) j["notes"] = notes;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "k " << code.dimension() << "\n";
    std::cout << "bound " << bound << "\n";
    std::cout << "optimal " << (optimal ? "yes" : "no") << "\n";
    std::cout << "provenance " << code.provenance << "\n";
    for (const auto& n : notes) std::cout << "note " << n << "\n";
    return 0;
}

struct VerifyArgs {
    std::string code_file;
    std::uint64_t budget = 0;
    std::size_t workers = 1;
    bool json = false;
};

int run_verify(const VerifyArgs& a) {
    const auto code = load_code(a.code_file);
    const auto rep = check_code(code, a.budget, a.workers);
    if (a.json)
        std::cout << rep.render_json() << "\n";
    else
        std::cout << rep.render();
    return rep.budget_exceeded ? 4 : 0;
}

struct SweepArgs {
    std::size_t m = 0, n = 0, delta = 1;
    std::uint64_t q = 0, budget = 0;
    bool json = false;
};

int run_sweep(const SweepArgs& a) {
    const auto rows = sweep(a.m, a.n, a.delta, field_from_q(a.q), a.budget);
    if (a.json) {
        auto arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j;
            j["gamma"] = row.gamma;
            j["k"] = row.dimension;
            j["bound"] = row.bound;
            j["gap"] = row.gap;
            j["path"] = row.path;
            if (row.distance.has_value())
                j["distance"] = *row.distance;
            else
                j["distance"] = nullptr;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << sweep_csv(rows);
    return 0;
}

struct Lemma3Args {
    std::size_t mu = 0, eta = 0, d = 0;
    std::uint64_t q = 0;
    std::string out;
};

int run_lemma3(const Lemma3Args& a) {
    const auto ext = Field::extend(field_from_q(a.q), static_cast<std::uint32_t>(a.mu));
    const Mat g = lemma3_matrix(a.mu, a.eta, a.d, ext);
    const std::string text = render_matrix(g);
    if (a.out.empty())
        std::cout << text;
    else
        write_file(a.out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank-metric codes in Ferrers diagrams: bounds, constructions, certification"};
    app.require_subcommand(1);

    BoundArgs bound_args;
    auto* bound_cmd = app.add_subcommand("bound", "Dimension bound of a diagram by dot counting");
    bound_cmd->add_option("diagram", bound_args.diagram_file, "Diagram file: X/. grid or 'gamma: ...' line")
        ->required();
    bound_cmd->add_option("--delta", bound_args.delta, "Minimum rank distance")->required();
    bound_cmd->add_flag("--json", bound_args.json, "Machine readable output");

    ConstructArgs cons_args;
    auto* cons_cmd = app.add_subcommand("construct", "Build a code for a diagram");
    cons_cmd->add_option("diagram", cons_args.diagram_file,
                         "Diagram file; for combine methods, the expected combined shape")
        ->required();
    cons_cmd->add_option("--delta", cons_args.delta, "Minimum rank distance")->required();
    cons_cmd->add_option("--q", cons_args.q, "Base field size (prime power)")->required();
    cons_cmd->add_option("--method", cons_args.method, "Construction to use")
        ->check(CLI::IsMember({"auto", "es", "mds", "subcode", "square3", "combine4", "combine5"}))
        ->capture_default_str();
    cons_cmd->add_option("--out", cons_args.out, "Write the code here (.json for the JSON form)");
    cons_cmd->add_option("--left", cons_args.left, "First input code file (combine methods)");
    cons_cmd->add_option("--right", cons_args.right, "Second input code file (combine methods)");
    cons_cmd->add_option("--filler-rows", cons_args.filler_rows,
                         "combine4: total rows of the upper-left block (0 = first code's rows)");
    cons_cmd->add_option("--filler-cols", cons_args.filler_cols,
                         "combine4: total middle columns (0 = second code's columns)");
    cons_cmd->add_option("--ell", cons_args.ell, "combine5: shared full columns on the right");
    cons_cmd->add_flag("--json", cons_args.json, "Machine readable output");

    VerifyArgs verify_args;
    verify_args.budget = default_budget();
    auto* verify_cmd = app.add_subcommand("verify", "Certify a code file by enumeration");
    verify_cmd->add_option("code", verify_args.code_file, "Code file (.json or text form)")->required();
    verify_cmd->add_option("--budget", verify_args.budget, "Codeword budget (default FDRC_BUDGET or 2^22)");
    verify_cmd->add_option("--parallel", verify_args.workers, "Worker threads for the enumeration");
    verify_cmd->add_flag("--json", verify_args.json, "Machine readable output");

    SweepArgs sweep_args;
    sweep_args.budget = default_budget();
    auto* sweep_cmd = app.add_subcommand("sweep", "Construct and certify every m x n diagram");
    sweep_cmd->add_option("--m", sweep_args.m, "Rows")->required();
    sweep_cmd->add_option("--n", sweep_args.n, "Columns")->required();
    sweep_cmd->add_option("--delta", sweep_args.delta, "Minimum rank distance")->required();
    sweep_cmd->add_option("--q", sweep_args.q, "Base field size (prime power)")->required();
    sweep_cmd->add_option("--budget", sweep_args.budget, "Codeword budget per diagram");
    sweep_cmd->add_flag("--json", sweep_args.json, "JSON rows instead of CSV");

    Lemma3Args lemma3_args;
    auto* lemma3_cmd =
        app.add_subcommand("lemma3", "Systematic maximum rank distance generator with zero corner");
    lemma3_cmd->add_option("--mu", lemma3_args.mu, "Extension degree")->required();
    lemma3_cmd->add_option("--eta", lemma3_args.eta, "Code length")->required();
    lemma3_cmd->add_option("--d", lemma3_args.d, "Rank distance of the first eta-1 columns")->required();
    lemma3_cmd->add_option("--q", lemma3_args.q, "Base field size (prime power)")->required();
    lemma3_cmd->add_option("--out", lemma3_args.out, "Write the matrix here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bound_cmd) return run_bound(bound_args);
        if (*cons_cmd) return run_construct(cons_args);
        if (*verify_cmd) return run_verify(verify_args);
        if (*sweep_cmd) return run_sweep(sweep_args);
        if (*lemma3_cmd) return run_lemma3(lemma3_args);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
