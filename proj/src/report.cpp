#include "homlie/report.hpp"

#include "homlie/document.hpp"

#include <map>
#include <sstream>

namespace homlie {

using nlohmann::json;

json vector_json(const Vector& v)
{
    json out = json::array();
    for (const auto& s : v)
        out.push_back(format_scalar(s));
    return out;
}

json subspace_json(const Subspace& s)
{
    json basis = json::array();
    for (const auto& v : s.basis_vectors())
        basis.push_back(vector_json(v));
    return {{"dim", s.dim()}, {"basis", basis}};
}

json verdict_json(const SeriesReport& report)
{
    if (report.verdict.terminates())
        return {{"type", "class"}, {"k", report.verdict.class_index()}};
    const std::size_t at = report.verdict.stabilized_at();
    return {{"type", "not_terminating"}, {"stabilized_at", at}, {"dim", report.dims[at]}};
}

json axioms_json(const HomLieAlgebra& L, const AxiomReport& report)
{
    json witnesses = json::array();
    for (const auto& w : report.witnesses)
        witnesses.push_back({{"axiom", w.axiom}, {"indices", w.indices}, {"residual", vector_json(w.residual)}});
    return {
        {"report", "axioms"},
        {"dim", L.dim()},
        {"basis", L.basis_names()},
        {"skew", report.skew_ok},
        {"hom_jacobi", report.hom_jacobi_ok},
        {"multiplicative", report.multiplicative_ok},
        {"classical_jacobi", report.classical_jacobi_ok},
        {"valid", report.multiplicative_hom_lie()},
        {"witnesses", witnesses},
    };
}

json series_json(const SeriesReport& report)
{
    json chain = json::array();
    for (const auto& s : report.chain)
        chain.push_back(subspace_json(s));
    return {
        {"report", "series"},
        {"kind", to_string(report.kind)},
        {"dims", report.dims},
        {"chain", chain},
        {"verdict", verdict_json(report)},
    };
}

json class_json(const std::string& notion, const SeriesReport& report)
{
    return {{"report", "class"}, {"notion", notion}, {"verdict", verdict_json(report)}};
}

json morphism_json(const MorphismVerdict& verdict)
{
    static const std::map<MorphismVerdict::Kind, const char*> names = {
        {MorphismVerdict::Kind::morphism, "morphism"},
        {MorphismVerdict::Kind::isomorphism, "isomorphism"},
        {MorphismVerdict::Kind::not_morphism, "not_morphism"},
    };
    json witness = nullptr;
    if (verdict.witness)
        witness = {{"identity", verdict.witness->identity},
                   {"indices", verdict.witness->indices},
                   {"residual", vector_json(verdict.witness->residual)}};
    return {{"report", "morphism"}, {"verdict", names.at(verdict.kind)}, {"witness", witness}};
}

json algebra_json(const std::string& name, const HomLieAlgebra& L)
{
    return {{"report", "algebra"}, {"name", name}, {"dim", L.dim()}, {"document", emit_document(name, L)}};
}

std::string format_subspace(const Subspace& s, const std::vector<std::string>& names)
{
    if (s.is_zero())
        return "0";
    std::string out = "span{";
    bool first = true;
    for (const auto& v : s.basis_vectors()) {
        out += (first ? "" : ", ") + format_combination(v, names);
        first = false;
    }
    return out + "}";
}

namespace {

std::string tuple(const std::vector<std::size_t>& indices, const std::vector<std::string>& names)
{
    std::string out = "(";
    for (std::size_t k = 0; k < indices.size(); ++k)
        out += (k ? ", " : "") + names[indices[k]];
    return out + ")";
}

} // namespace

std::string format_axioms(const HomLieAlgebra& L, const AxiomReport& report)
{
    constexpr std::size_t shown = 5;
    std::ostringstream out;
    auto section = [&](const char* label, bool ok, const char* axiom) {
        out << label << ": " << (ok ? "ok" : "FAIL") << "\n";
        std::size_t count = 0;
        for (const auto& w : report.witnesses) {
            if (w.axiom != axiom)
                continue;
            if (count++ < shown)
                out << "  " << tuple(w.indices, L.basis_names()) << ": "
                    << format_combination(w.residual, L.basis_names()) << "\n";
        }
        if (count > shown)
            out << "  ... " << (count - shown) << " more\n";
    };
    section("skew-symmetry", report.skew_ok, kSkew);
    section("hom-jacobi", report.hom_jacobi_ok, kHomJacobi);
    section("multiplicative", report.multiplicative_ok, kMultiplicative);
    section("classical jacobi (informational)", report.classical_jacobi_ok, kClassicalJacobi);
    out << (report.multiplicative_hom_lie() ? "multiplicative Hom-Lie algebra" : "not a multiplicative Hom-Lie algebra")
        << "\n";
    return out.str();
}

std::string format_series(const std::string& name, const HomLieAlgebra& L, const SeriesReport& report)
{
    std::ostringstream out;
    out << to_string(report.kind) << " series of " << (name.empty() ? "algebra" : name) << "\n";
    out << "step  dim  basis\n";
    for (std::size_t i = 0; i < report.chain.size(); ++i) {
        std::string step = std::to_string(i), dim = std::to_string(report.dims[i]);
        out << step << std::string(6 - std::min<std::size_t>(step.size(), 5), ' ') << dim
            << std::string(5 - std::min<std::size_t>(dim.size(), 4), ' ')
            << format_subspace(report.chain[i], L.basis_names()) << "\n";
    }
    if (report.verdict.terminates())
        out << "verdict: class " << report.verdict.class_index() << "\n";
    else
        out << "verdict: not terminating (stabilized at step " << report.verdict.stabilized_at() << ", dim "
            << report.dims[report.verdict.stabilized_at()] << ")\n";
    return out.str();
}

std::string format_class(const std::string& notion, const SeriesReport& report)
{
    if (report.verdict.terminates())
        return notion + ": class " + std::to_string(report.verdict.class_index());
    return "not " + notion + " (stabilized at dim " + std::to_string(report.dims[report.verdict.stabilized_at()]) +
           ")";
}

std::string format_morphism(const LinearMap& f, const MorphismVerdict& verdict)
{
    if (!verdict.witness)
        return to_string(verdict.kind);
    const auto& w = *verdict.witness;
    const auto& names = f.source.basis_names();
    std::string where = w.identity == "bracket" ? "f([" + names[w.indices[0]] + ", " + names[w.indices[1]] +
                                                      "]) - [f(" + names[w.indices[0]] + "), f(" +
                                                      names[w.indices[1]] + ")]"
                                                : "f(alpha(" + names[w.indices[0]] + ")) - alpha(f(" +
                                                      names[w.indices[0]] + "))";
    return "not a morphism: " + where + " = " + format_combination(w.residual, f.target.basis_names());
}

} // namespace homlie
