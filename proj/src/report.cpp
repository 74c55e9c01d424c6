#include "qprm/report.hpp"

#include "qprm/form_syntax.hpp"

#include <iomanip>
#include <sstream>

namespace qprm {

namespace {

Json optional_count(const std::optional<Count>& c) { return c ? Json(*c) : Json(nullptr); }

std::string cell(const std::optional<Count>& c) { return c ? std::to_string(*c) : std::string("-"); }

}  // namespace

Json to_json(const Field& f, const ClassificationReport& r) {
    Json basis = Json::array();
    for (const auto& v : r.singular_locus.basis) basis.push_back(render_point(f, v));
    return Json{
        {"class", std::string(to_string(r.klass))},
        {"rank", r.rank},
        {"singular_locus", {{"dimension", r.singular_locus.dimension()}, {"basis", basis}}},
        {"point_count", r.point_count},
        {"projective_index", r.projective_index},
    };
}

Json to_json(const MinimalityVerdict& v) {
    return Json{
        {"minimal", v.minimal},
        {"method", std::string(to_string(v.method))},
        {"witness", v.witness ? Json(render_form(*v.witness)) : Json(nullptr)},
    };
}

Json to_json(const MinimalCountTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"weight", r.weight}, {"closed", optional_count(r.closed)}, {"brute", optional_count(r.brute)}});
    }
    return Json{{"q", t.q}, {"N", t.N}, {"delta", t.delta}, {"epsilon", t.epsilon}, {"rows", rows}};
}

Json to_json(const ContainmentViolation& v) {
    const Field& f = v.inner.field();
    return Json{
        {"inner", render_form(v.inner)},
        {"outer", render_form(v.outer)},
        {"shape", std::string(to_string(v.shape))},
        {"inner_report", to_json(f, v.inner_report)},
        {"outer_report", to_json(f, v.outer_report)},
    };
}

Json to_json(const ContainmentReport& r) {
    Json shapes = Json::object();
    for (auto s : {ViolationShape::EllipticInHyperbolic, ViolationShape::RankThreeInHyperplanePair,
                   ViolationShape::EllipticInHyperplanePair, ViolationShape::Inadmissible}) {
        shapes[std::string(to_string(s))] = r.count(s);
    }
    Json list = Json::array();
    for (const auto& v : r.violations) list.push_back(to_json(v));
    return Json{{"q", r.q},           {"N", r.N},         {"forms_scanned", r.forms_scanned},
                {"admissible", r.admissible()}, {"shapes", shapes}, {"violations", list}};
}

Json to_json(const FormSurvey& s) {
    Json hist = Json::array();
    for (const auto& [key, n] : s.histogram) {
        hist.push_back({{"class", std::string(to_string(key.first))}, {"rank", key.second}, {"quadrics", n}});
    }
    return Json{
        {"q", s.q},
        {"N", s.N},
        {"forms", s.forms},
        {"count_law_failures", s.count_law_failures},
        {"class_disagreements", s.class_disagreements},
        {"first_failure", s.first_failure ? Json(render_form(*s.first_failure)) : Json(nullptr)},
        {"serre_bound", s.serre_bound},
        {"max_points", s.max_points},
        {"max_only_hyperplane_pairs", s.max_only_hyperplane_pairs},
        {"hyperplane_pairs_attain_max", s.hyperplane_pairs_attain_max},
        {"histogram", hist},
    };
}

Json to_json(const ConicSystem& s) {
    return Json{{"dimension", s.dimension},
                {"members", s.members},
                {"reducible", s.reducible},
                {"irreducible", s.irreducible}};
}

Json code_info(const PrmCode& code) {
    const auto q = static_cast<Count>(code.field().order());
    const int N = code.ambient();
    return Json{
        {"q", q},
        {"N", N},
        {"length", code.length()},
        {"dimension", code.dimension()},
        {"min_distance", ipow(q, N) - ipow(q, N - 1)},
    };
}

Json points_json(const QuadraticForm& F, const ProjectiveSpace& space) {
    const auto zeros = point_set(F, space);
    Json idx = Json::array();
    Json pts = Json::array();
    for (auto k : zeros.indices()) {
        idx.push_back(k);
        pts.push_back(render_point(space.field(), space.point(k)));
    }
    return Json{{"count", zeros.size()}, {"indices", idx}, {"points", pts}};
}

std::string table_csv(const MinimalCountTable& t) {
    std::ostringstream out;
    out << "q,N,delta,epsilon,weight,closed,brute\n";
    for (const auto& r : t.rows) {
        out << t.q << ',' << t.N << ',' << t.delta << ',' << t.epsilon << ',' << r.weight << ','
            << (r.closed ? std::to_string(*r.closed) : "") << ',' << (r.brute ? std::to_string(*r.brute) : "") << '\n';
    }
    return out.str();
}

std::string table_text(const MinimalCountTable& t) {
    std::ostringstream out;
    out << "q=" << t.q << " N=" << t.N << " delta=" << t.delta << " epsilon=" << t.epsilon << '\n';
    out << std::setw(10) << "weight" << std::setw(14) << "closed" << std::setw(14) << "brute" << '\n';
    for (const auto& r : t.rows) {
        out << std::setw(10) << r.weight << std::setw(14) << cell(r.closed) << std::setw(14) << cell(r.brute) << '\n';
    }
    return out.str();
}

}  // namespace qprm
