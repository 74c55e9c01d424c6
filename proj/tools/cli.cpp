#include "cli.hpp"

#include "qprm/census.hpp"
#include "qprm/error.hpp"
#include "qprm/form_syntax.hpp"
#include "qprm/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace qprm::cli {

namespace {

enum class Format { Json, Csv, Table };

struct Config {
    int q = 2;
    int N = 2;
    std::string format = "json";
    unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    Count budget = ScanOptions{}.budget;
    std::string out_path;
    std::string method = "char";
    std::string form;
    std::string target;
    std::uint64_t seed = 1;
    std::size_t count = 10;
};

Format format_of(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "table") return Format::Table;
    return Format::Json;
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Non-table results fall back to key/value lines for csv and table output.
std::string render(const Json& j, Format fmt) {
    if (fmt == Format::Json || !j.is_object()) return j.dump(2) + "\n";
    std::ostringstream out;
    if (fmt == Format::Csv) out << "key,value\n";
    for (const auto& [k, v] : j.items()) {
        if (fmt == Format::Csv) {
            std::string s = scalar(v);
            if (s.find_first_of(",\"\n") != std::string::npos) {
                std::string quoted = "\"";
                for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
                s = quoted + "\"";
            }
            out << k << ',' << s << '\n';
        } else {
            out << k << ": " << scalar(v) << '\n';
        }
    }
    return out.str();
}

std::string render_table(const MinimalCountTable& t, Format fmt) {
    switch (fmt) {
        case Format::Csv: return table_csv(t);
        case Format::Table: return table_text(t);
        case Format::Json: break;
    }
    return to_json(t).dump(2) + "\n";
}

ScanOptions scan_options(const Config& c) { return ScanOptions{c.workers, c.budget}; }

MinimalityMethod method_of(const std::string& s) {
    const auto m = minimality_method_from_string(s);
    if (!m) throw Error(ErrorKind::OutOfRange, "unknown method " + s);
    return *m;
}

struct Outcome {
    std::string text;
    int code = kPass;
};

Outcome cmd_classify(const Config& c, const FieldRef& f, Format fmt) {
    const auto F = parse_form(c.form, f, c.N);
    const ProjectiveSpace space(f, c.N);
    Json j = to_json(*f, classify(F, space));
    j["form"] = render_form(F);
    return {render(j, fmt)};
}

Outcome cmd_points(const Config& c, const FieldRef& f, Format fmt) {
    const auto F = parse_form(c.form, f, c.N);
    if (F.is_zero()) throw Error(ErrorKind::ZeroForm, "the zero form has no quadric");
    return {render(points_json(F, ProjectiveSpace(f, c.N)), fmt)};
}

Outcome cmd_code(const Config& c, const FieldRef& f, Format fmt) {
    if (c.target != "info") throw Error(ErrorKind::OutOfRange, "unknown code command " + c.target);
    return {render(code_info(build_code(f, c.N)), fmt)};
}

Outcome cmd_minimal(const Config& c, const FieldRef& f, Format fmt) {
    const auto F = parse_form(c.form, f, c.N);
    if (F.is_zero()) throw Error(ErrorKind::ZeroForm, "minimality of the zero form");
    const auto code = build_code(f, c.N);
    MinimalityVerdict v;
    switch (method_of(c.method)) {
        case MinimalityMethod::Characterization: v = is_minimal_characterization(F, code.space()); break;
        case MinimalityMethod::Interpolation: v = is_minimal_interpolation(code, F); break;
        case MinimalityMethod::Exhaustive: v = is_minimal_exhaustive(code, code.encode(F)); break;
    }
    Json j = to_json(v);
    j["form"] = render_form(F);
    j["weight"] = code.encode(F).weight;
    return {render(j, fmt)};
}

Outcome cmd_census(const Config& c, const FieldRef& f, Format fmt) {
    const auto t = brute_force_census(f, c.N, method_of(c.method), scan_options(c));
    return {render_table(t, fmt), t.columns_agree() ? kPass : kFail};
}

Outcome verify_pencil(const Config& c, const FieldRef& f, Format fmt) {
    if (c.N != 2) throw Error(ErrorKind::OutOfRange, "pencil verification runs in the plane (N = 2)");
    const auto conic = c.form.empty() ? canonical_form(f, 2, QuadricClass::Parabolic, 3) : parse_form(c.form, f, 2);
    const auto rep = classify(conic);
    if (rep.klass != QuadricClass::Parabolic || rep.rank != 3) {
        throw Error(ErrorKind::OutOfRange, "pencil verification needs a smooth conic");
    }
    const auto sys = conic_linear_system(build_code(f, 2), conic);
    bool ok = false;
    if (c.q == 2) {
        ok = sys.members == 7 && sys.reducible == 6 && sys.irreducible == 1;
    } else if (c.q == 3) {
        ok = sys.members == 4 && sys.reducible == 3 && sys.irreducible == 1;
    } else {
        ok = sys.members == 1 && sys.irreducible == 1;
    }
    Json j = to_json(sys);
    j["conic"] = render_form(conic);
    j["pass"] = ok;
    return {render(j, fmt), ok ? kPass : kFail};
}

Outcome cmd_verify(const Config& c, const FieldRef& f, Format fmt) {
    if (c.target == "containment") {
        const auto r = verify_containment(f, c.N, scan_options(c));
        Json j = to_json(r);
        j["pass"] = r.admissible();
        return {render(j, fmt), r.admissible() ? kPass : kFail};
    }
    if (c.target == "exception") {
        const auto e = check_exception_example();
        const auto f2 = field_create(2, 1);
        Json j{{"inner", to_json(*f2, e.inner)},
               {"outer", to_json(*f2, e.outer)},
               {"strictly_contained", e.strictly_contained},
               {"pass", e.holds}};
        return {render(j, fmt), e.holds ? kPass : kFail};
    }
    if (c.target == "serre") {
        const auto s = survey_forms(f, c.N, scan_options(c));
        Json j = to_json(s);
        j["pass"] = s.serre_holds();
        return {render(j, fmt), s.serre_holds() ? kPass : kFail};
    }
    if (c.target == "pencil") return verify_pencil(c, f, fmt);
    throw Error(ErrorKind::OutOfRange, "unknown verification " + c.target);
}

Outcome cmd_sample(const Config& c, const FieldRef& f, Format fmt) {
    std::mt19937_64 rng(c.seed);
    const auto total = form_count(static_cast<Count>(f->order()), c.N);
    std::uniform_int_distribution<Count> pick(1, total - 1);
    const ProjectiveSpace space(f, c.N);
    Json list = Json::array();
    for (std::size_t i = 0; i < c.count; ++i) {
        const auto F = form_from_index(f, c.N, pick(rng));
        const auto rep = classify(F, space);
        list.push_back({{"form", render_form(F)},
                        {"class", std::string(to_string(rep.klass))},
                        {"rank", rep.rank},
                        {"point_count", rep.point_count}});
    }
    if (fmt == Format::Json) return {list.dump(2) + "\n"};
    std::ostringstream out;
    if (fmt == Format::Csv) out << "form,class,rank,point_count\n";
    for (const auto& e : list) {
        const char sep = fmt == Format::Csv ? ',' : '\t';
        out << e["form"].get<std::string>() << sep << e["class"].get<std::string>() << sep << e["rank"] << sep
            << e["point_count"] << '\n';
    }
    return {out.str()};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Quadrics over finite fields and projective Reed-Muller codes of order 2", "qprm"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--q", c.q, "field order, a prime power up to 25")->capture_default_str();
    app.add_option("--N", c.N, "projective dimension")->capture_default_str();
    app.add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--workers", c.workers, "scan threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--budget", c.budget, "largest number of forms a scan may enumerate")->capture_default_str();
    app.add_option("--out", c.out_path, "write the result to this file");

    auto* classify_cmd = app.add_subcommand("classify", "classify a quadratic form");
    classify_cmd->add_option("form", c.form)->required();
    auto* points_cmd = app.add_subcommand("points", "rational points of a quadric");
    points_cmd->add_option("form", c.form)->required();
    auto* code_cmd = app.add_subcommand("code", "code parameters");
    code_cmd->add_option("what", c.target)->required()->check(CLI::IsMember({"info"}));
    const auto methods = CLI::IsMember({"char", "interp", "exhaustive"});
    auto* minimal_cmd = app.add_subcommand("minimal", "minimality of a codeword");
    minimal_cmd->add_option("form", c.form)->required();
    minimal_cmd->add_option("--method", c.method)->check(methods)->capture_default_str();
    auto* census_cmd = app.add_subcommand("census", "minimal-codeword counts by weight");
    census_cmd->add_option("--method", c.method)->check(methods)->capture_default_str();
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive verification");
    verify_cmd->add_option("what", c.target)
        ->required()
        ->check(CLI::IsMember({"containment", "exception", "serre", "pencil"}));
    verify_cmd->add_option("form", c.form, "conic for the pencil check");
    auto* sample_cmd = app.add_subcommand("sample", "random nonzero forms with their classes");
    sample_cmd->add_option("--seed", c.seed)->capture_default_str();
    sample_cmd->add_option("--count", c.count)->capture_default_str();

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    Outcome result;
    try {
        if (c.q > 25) throw Error(ErrorKind::FieldTooLarge, "q must be at most 25");
        const auto f = field_from_order(c.q);
        const auto fmt = format_of(c.format);
        if (*classify_cmd) result = cmd_classify(c, f, fmt);
        else if (*points_cmd) result = cmd_points(c, f, fmt);
        else if (*code_cmd) result = cmd_code(c, f, fmt);
        else if (*minimal_cmd) result = cmd_minimal(c, f, fmt);
        else if (*census_cmd) result = cmd_census(c, f, fmt);
        else if (*verify_cmd) result = cmd_verify(c, f, fmt);
        else result = cmd_sample(c, f, fmt);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (c.out_path.empty()) {
        out << result.text;
    } else {
        std::ofstream file(c.out_path);
        if (!file) {
            err << "error: cannot write " << c.out_path << '\n';
            return kUsage;
        }
        file << result.text;
    }
    return result.code;
}

}  // namespace qprm::cli
