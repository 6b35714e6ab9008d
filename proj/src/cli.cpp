#include "homlie/cli.hpp"

#include "homlie/document.hpp"
#include "homlie/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace homlie::cli {

namespace {

using nlohmann::json;

struct Options {
    bool json = false;
    std::optional<std::size_t> max_steps;

    std::string kind;
    std::string file;
    std::string file2;
    std::string spec;
    std::string example;
    std::optional<std::size_t> n;
    std::uint64_t seed = 0;
    bool emit = false;
};

class Failure : public std::runtime_error {
public:
    Failure(ExitCode code, const std::string& message) : std::runtime_error(message), code(code) {}
    ExitCode code;
};

AlgebraDocument load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure(parse_error, "cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_document(buffer.str());
    } catch (const DocumentError& e) {
        throw Failure(parse_error, path + ": " + e.what());
    }
}

class Runner {
public:
    Runner(const Options& options, std::ostream& out) : opt_(options), out_(out) {}

    int check()
    {
        AlgebraDocument doc = load(opt_.file);
        AxiomReport report = check_axioms(doc.algebra);
        if (opt_.json)
            out_ << axioms_json(doc.algebra, report).dump(2) << "\n";
        else
            out_ << format_axioms(doc.algebra, report);
        return report.multiplicative_hom_lie() ? ok : negative_verdict;
    }

    int series()
    {
        AlgebraDocument doc = load(opt_.file);
        SeriesReport report = compute_series(doc.algebra, series_kind(), opt_.max_steps);
        if (opt_.json)
            out_ << series_json(report).dump(2) << "\n";
        else
            out_ << format_series(doc.name, doc.algebra, report);
        return report.verdict.terminates() ? ok : negative_verdict;
    }

    int klass()
    {
        AlgebraDocument doc = load(opt_.file);
        SeriesKind kind = opt_.kind == "solvable" ? SeriesKind::derived : SeriesKind::lower_central;
        SeriesReport report = compute_series(doc.algebra, kind, opt_.max_steps);
        if (opt_.json)
            out_ << class_json(opt_.kind, report).dump(2) << "\n";
        else
            out_ << format_class(opt_.kind, report) << "\n";
        return report.verdict.terminates() ? ok : negative_verdict;
    }

    int quotient_cmd()
    {
        AlgebraDocument doc = load(opt_.file);
        Subspace ideal = span(spec_vectors(doc.algebra.dim()), doc.algebra.dim());
        QuotientResult q = quotient(doc.algebra, ideal);
        return emit(derived_name(doc.name, "quotient"), q.quotient);
    }

    int direct_sum_cmd()
    {
        AlgebraDocument a = load(opt_.file);
        AlgebraDocument b = load(opt_.file2);
        return emit(a.name + "+" + b.name, direct_sum(a.algebra, b.algebra));
    }

    int restrict_cmd()
    {
        AlgebraDocument doc = load(opt_.file);
        Subspace H = span(spec_vectors(doc.algebra.dim()), doc.algebra.dim());
        return emit(derived_name(doc.name, "subalgebra"), restrict(doc.algebra, H).algebra);
    }

    int morphism()
    {
        AlgebraDocument a = load(opt_.file);
        AlgebraDocument b = load(opt_.file2);
        Matrix m;
        try {
            m = parse_matrix_spec(opt_.spec, b.algebra.dim(), a.algebra.dim());
        } catch (const DocumentError& e) {
            throw Failure(parse_error, std::string("--matrix: ") + e.what());
        }
        LinearMap f(a.algebra, b.algebra, m);
        MorphismVerdict verdict = check_morphism(f);
        if (opt_.json)
            out_ << morphism_json(verdict).dump(2) << "\n";
        else
            out_ << format_morphism(f, verdict) << "\n";
        return verdict.is_morphism() ? ok : negative_verdict;
    }

    int example()
    {
        Fixture fx;
        try {
            fx = fixture_by_name(opt_.example, opt_.n, opt_.seed);
        } catch (const std::invalid_argument& e) {
            throw Failure(parse_error, e.what());
        }
        if (opt_.emit)
            return emit(fx.name, fx.algebra);

        AxiomReport axioms = check_axioms(fx.algebra);
        SeriesReport derived = compute_series(fx.algebra, SeriesKind::derived, opt_.max_steps);
        SeriesReport lower = compute_series(fx.algebra, SeriesKind::lower_central, opt_.max_steps);
        bool matches = true;
        if (fx.expected.solvable && !(*fx.expected.solvable == derived.verdict))
            matches = false;
        if (fx.expected.nilpotent && !(*fx.expected.nilpotent == lower.verdict))
            matches = false;
        if (fx.expected.classical_jacobi && *fx.expected.classical_jacobi != axioms.classical_jacobi_ok)
            matches = false;

        if (opt_.json) {
            out_ << json{{"report", "example"},
                         {"name", fx.name},
                         {"dim", fx.algebra.dim()},
                         {"axioms", axioms_json(fx.algebra, axioms)},
                         {"solvable", verdict_json(derived)},
                         {"nilpotent", verdict_json(lower)},
                         {"matches_expected", matches}}
                        .dump(2)
                 << "\n";
        } else {
            out_ << "example " << fx.name << " (dim " << fx.algebra.dim() << ")\n"
                 << "axioms: "
                 << (axioms.multiplicative_hom_lie() ? "multiplicative Hom-Lie algebra"
                                                     : "not a multiplicative Hom-Lie algebra")
                 << (axioms.classical_jacobi_ok ? "" : ", classical Jacobi fails") << "\n"
                 << format_class("solvable", derived) << "\n"
                 << format_class("nilpotent", lower) << "\n"
                 << "expected verdicts: " << (matches ? "match" : "MISMATCH") << "\n";
        }
        return matches ? ok : negative_verdict;
    }

private:
    SeriesKind series_kind() const
    {
        return opt_.kind == "derived" ? SeriesKind::derived : SeriesKind::lower_central;
    }

    std::vector<Vector> spec_vectors(std::size_t dim) const
    {
        try {
            return parse_vector_list(opt_.spec, dim);
        } catch (const DocumentError& e) {
            throw Failure(parse_error, std::string("subspace SPEC: ") + e.what());
        }
    }

    static std::string derived_name(const std::string& name, const char* what)
    {
        return (name.empty() ? std::string("algebra") : name) + "-" + what;
    }

    int emit(const std::string& name, const HomLieAlgebra& L)
    {
        if (opt_.json)
            out_ << algebra_json(name, L).dump(2) << "\n";
        else
            out_ << emit_document(name, L);
        return ok;
    }

    const Options& opt_;
    std::ostream& out_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Exact Hom-Lie algebra toolkit: axioms, derived and lower central series, constructions", "homlie"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "Emit machine-readable JSON reports");
    app.add_option("--max-steps", opt.max_steps, "Bound on series steps (default: dim + 1)");

    auto* check = app.add_subcommand("check", "Verify skew-symmetry, Hom-Jacobi and multiplicativity");
    check->add_option("FILE", opt.file)->required();

    auto* series = app.add_subcommand("series", "Compute the derived or lower central series");
    series->add_option("KIND", opt.kind)->required()->check(CLI::IsMember({"derived", "lower-central"}));
    series->add_option("FILE", opt.file)->required();

    auto* klass = app.add_subcommand("class", "Solvable or nilpotent class");
    klass->add_option("NOTION", opt.kind)->required()->check(CLI::IsMember({"solvable", "nilpotent"}));
    klass->add_option("FILE", opt.file)->required();

    auto* quot = app.add_subcommand("quotient", "Quotient by an ideal, emitted as a document");
    quot->add_option("FILE", opt.file)->required();
    quot->add_option("--ideal", opt.spec, "Spanning vectors, e.g. \"1,0;0,1\"")->required();

    auto* dsum = app.add_subcommand("direct-sum", "Direct sum of two algebras");
    dsum->add_option("FILE1", opt.file)->required();
    dsum->add_option("FILE2", opt.file2)->required();

    auto* restr = app.add_subcommand("restrict", "Subalgebra in its canonical basis");
    restr->add_option("FILE", opt.file)->required();
    restr->add_option("--subspace", opt.spec, "Spanning vectors, e.g. \"1,0,0;0,1,0\"")->required();

    auto* morph = app.add_subcommand("morphism", "Verify a linear map FILE1 -> FILE2");
    morph->add_option("FILE1", opt.file)->required();
    morph->add_option("FILE2", opt.file2)->required();
    morph->add_option("--matrix", opt.spec, "Rows of the dim2 x dim1 matrix, e.g. \"1,0;0,1\"")->required();

    auto* example = app.add_subcommand("example", "Run or export a built-in example");
    example->add_option("NAME", opt.example)->required();
    example->add_option("--n", opt.n, "Dimension parameter (family, abelian, random)");
    example->add_option("--seed", opt.seed, "Seed for the random example");
    example->add_flag("--emit", opt.emit, "Print the example as a document instead of running it");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return parse_error;
    }

    auto fail = [&](int code, const std::string& message) {
        if (opt.json)
            out << json{{"report", "error"}, {"exit_code", code}, {"message", message}}.dump(2) << "\n";
        err << "error: " << message << "\n";
        return code;
    };

    Runner runner(opt, out);
    try {
        if (check->parsed())
            return runner.check();
        if (series->parsed())
            return runner.series();
        if (klass->parsed())
            return runner.klass();
        if (quot->parsed())
            return runner.quotient_cmd();
        if (dsum->parsed())
            return runner.direct_sum_cmd();
        if (restr->parsed())
            return runner.restrict_cmd();
        if (morph->parsed())
            return runner.morphism();
        if (example->parsed())
            return runner.example();
    } catch (const Failure& e) {
        return fail(e.code, e.what());
    } catch (const PreconditionError& e) {
        return fail(refused, e.what());
    } catch (const DimensionError& e) {
        return fail(parse_error, e.what());
    }
    return fail(parse_error, "no command given");
}

} // namespace homlie::cli
