#include "symprod/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace symprod {

namespace {

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw std::domain_error(std::string("bad JSON argument: ") + e.what());
    }
}

Json parse_inline_or_file(const std::string& arg) {
    const size_t first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
        return parse_json_text(arg);
    std::ifstream in(arg);
    if (!in) throw std::domain_error("cannot open file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

Int parse_int_arg(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed integer: " + s);
    }
}

std::string point_to_string(const Json& coords) {
    std::string out = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += " : ";
        out += int_from_json(coords[i]).get_str();
    }
    return out + ")";
}

std::string rat_to_human(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string form_to_string(const HomogeneousForm& f) {
    if (f.is_zero()) return "0";
    static const char* vars[3] = {"X", "Y", "Z"};
    std::string out;
    for (const auto& [e, c] : f.terms) {
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            if (e[static_cast<size_t>(v)] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[v];
            if (e[static_cast<size_t>(v)] > 1)
                mono += "^" + std::to_string(e[static_cast<size_t>(v)]);
        }
        Rat cc = c;
        const bool neg = cc < 0;
        if (neg) cc = -cc;
        const std::string coeff = rat_to_human(cc);
        std::string piece;
        if (mono.empty())
            piece = coeff;
        else if (coeff == "1")
            piece = mono;
        else
            piece = coeff + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

std::string render_search_table(const Json& o) {
    std::ostringstream out;
    out << "grid: g in [" << o.at("g_min").get<int>() << ", " << o.at("g_max").get<int>()
        << "], d in [1, " << int_from_json(o.at("d_max")).get_str()
        << "], threshold " << int_from_json(o.at("threshold")).get_str() << "\n";
    out << std::setw(4) << "g" << std::setw(6) << "d" << std::setw(9) << "value"
        << "  verdict\n";
    for (const auto& row : o.at("candidates")) {
        out << std::setw(4) << row.at("g").get<int>() << std::setw(6)
            << int_from_json(row.at("d")).get_str() << std::setw(9)
            << int_from_json(row.at("value")).get_str() << "  ";
        if (row.at("survives").get<bool>())
            out << "survives\n";
        else
            out << "excluded: " << row.at("excluded_by").get<std::string>() << "\n";
    }
    if (o.at("surviving").empty())
        out << "surviving pairs: none\n";
    else {
        out << "surviving pairs:";
        for (const auto& p : o.at("surviving"))
            out << " (" << p[0].get<int>() << ", " << int_from_json(p[1]).get_str() << ")";
        out << "\n";
    }
    const Json& conclusion = o.at("min_degree_conclusion");
    if (conclusion.is_string() && conclusion.get<std::string>().rfind("> ", 0) == 0)
        out << "conclusion: every admissible top self-intersection exceeds "
            << int_from_json(o.at("threshold")).get_str();
    else
        out << "conclusion: minimal admissible top self-intersection is "
            << int_from_json(conclusion).get_str();
    return out.str();
}

std::string render_quintic_construction(const Json& o) {
    std::ostringstream out;
    out << "quintic   = " << form_to_string(form_from_json(o.at("quintic"))) << "\n";
    out << "nullity   = " << o.at("nullity").get<int>() << "\n";
    out << "attempts  = " << o.at("attempts").get<unsigned>() << "\n";
    out << "tangency points:";
    for (const auto& p : o.at("tangency_points")) out << " " << point_to_string(p);
    out << "\n";
    out << "extra point: " << point_to_string(o.at("extra_point")) << "\n";
    out << "pullback scale = " << rat_to_human(rat_from_json(o.at("pullback_scale")));
    if (o.contains("singular_points")) {
        out << "\nsingular points: ";
        if (o.at("singular_points").empty())
            out << "none (smoothness certified)";
        else
            for (const auto& p : o.at("singular_points")) out << " " << point_to_string(p);
    }
    return out.str();
}

std::string render_verification(const Json& o) {
    std::ostringstream out;
    for (const auto& s : o.at("stages"))
        out << (s.at("ok").get<bool>() ? "[ ok ] " : "[FAIL] ") << std::left << std::setw(20)
            << s.at("name").get<std::string>() << " " << s.at("detail").get<std::string>()
            << "\n";
    out << "rank = " << o.at("rank").get<int>() << ", collinear = "
        << (o.at("collinear").get<bool>() ? "yes" : "no") << ", target degree = "
        << int_from_json(o.at("target_degree")).get_str() << "\n";
    out << (o.at("all_ok").get<bool>() ? "verdict: all stages passed"
                                       : "verdict: verification FAILED");
    return out.str();
}

}  // namespace

Json CommandResult::to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    if (error_code.empty()) {
        j["outputs"] = outputs;
    } else {
        Json err;
        err["code"] = error_code;
        err["message"] = error_message;
        j["error"] = std::move(err);
    }
    j["exit_code"] = exit_code;
    return j;
}

std::string CommandResult::render_human() const {
    if (!error_code.empty()) return "error (" + error_code + "): " + error_message;
    if (command == "help") return outputs.at("help").get<std::string>();
    if (command == "ns intersect" || command == "ns degree")
        return "value = " + int_from_json(outputs.at("value")).get_str();
    if (command == "series max-r9")
        return "max r = " + std::to_string(outputs.at("r").get<int>());
    if (command == "series castelnuovo")
        return "genus bound = " + int_from_json(outputs.at("bound")).get_str();
    if (command == "series search") return render_search_table(outputs);
    if (command == "embed phi" || command == "embed veronese")
        return "image = " + point_to_string(outputs.at("point"));
    if (command == "embed collinear")
        return "rank = " + std::to_string(outputs.at("rank").get<int>()) +
               "\ncollinear = " + (outputs.at("collinear").get<bool>() ? "yes" : "no");
    if (command == "quintic construct") return render_quintic_construction(outputs);
    if (command == "quintic verify") return render_verification(outputs);
    return outputs.dump(2);
}

CommandResult run(const std::vector<std::string>& args) {
    CommandResult res;

    CLI::App app{"exact divisor calculus on symmetric products of curves"};
    app.name("symprod");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit the result as JSON instead of a table");
    app.require_subcommand(1);

    // ns ------------------------------------------------------------------
    auto* ns = app.add_subcommand("ns", "intersection calculus in the (xi, theta) lattice");
    ns->require_subcommand(1);
    int ns_g = 0, ns_n = 0;
    std::string ns_classes, ns_kind, ns_d;
    auto* ns_intersect =
        ns->add_subcommand("intersect", "top intersection number of n divisor classes");
    ns_intersect->add_option("--g", ns_g, "genus")->required();
    ns_intersect->add_option("--n", ns_n, "symmetric power")->required();
    ns_intersect->add_option("--classes", ns_classes, "JSON array of [xi, theta] pairs")
        ->required();
    auto* ns_degree = ns->add_subcommand("degree", "top self-intersection of a standard class");
    ns_degree->add_option("--kind", ns_kind, "sym or alt")
        ->required()
        ->check(CLI::IsMember({"sym", "alt"}));
    ns_degree->add_option("--g", ns_g, "genus")->required();
    ns_degree->add_option("--n", ns_n, "symmetric power")->required();
    ns_degree->add_option("--d", ns_d, "bundle degree on the curve")->required();

    // series --------------------------------------------------------------
    auto* series = app.add_subcommand("series", "linear series feasibility bounds");
    series->require_subcommand(1);
    int se_g = 0, se_r = 0;
    std::string se_d;
    bool se_hyp = false, se_trig = false;
    auto* se_maxr9 = series->add_subcommand("max-r9", "largest possible r for a g^r_9");
    se_maxr9->add_option("--g", se_g, "genus (>= 5)")->required();
    se_maxr9->add_flag("--hyperelliptic", se_hyp, "curve carries a g^1_2");
    se_maxr9->add_flag("--trigonal", se_trig, "curve carries a g^1_3");
    auto* se_cast = series->add_subcommand("castelnuovo", "Castelnuovo genus bound pi(d, r)");
    se_cast->add_option("--d", se_d, "degree")->required();
    se_cast->add_option("--r", se_r, "target projective dimension (>= 2)")->required();
    int se_gmin = 0, se_gmax = 0;
    std::string se_dmax;
    auto* se_search = series->add_subcommand(
        "search", "scan (g, d) for low-degree very-ample alternation classes on C(3)");
    se_search->add_option("--g-min", se_gmin, "lowest genus (>= 5)")->required();
    se_search->add_option("--g-max", se_gmax, "highest genus")->required();
    se_search->add_option("--d-max", se_dmax, "highest degree (default g-max + 10)");

    // embed -----------------------------------------------------------------
    auto* embed = app.add_subcommand("embed", "cubic-form embedding of degree-3 divisors");
    embed->require_subcommand(1);
    std::string em_divisor, em_point, em_points;
    auto* em_phi = embed->add_subcommand("phi", "image of a degree-3 divisor in P^9");
    em_phi->add_option("--divisor", em_divisor, "JSON divisor ({\"points\": [...]}) or file")
        ->required();
    auto* em_ver = embed->add_subcommand("veronese", "image of the triple divisor 3x");
    em_ver->add_option("--point", em_point, "JSON P^2 point [x, y, z]")->required();
    auto* em_col = embed->add_subcommand("collinear", "exact collinearity test in P^9");
    em_col->add_option("--points", em_points, "JSON array of three P^9 points")->required();

    // quintic ---------------------------------------------------------------
    auto* quintic = app.add_subcommand("quintic", "plane quintic with a totally tangent conic");
    quintic->require_subcommand(1);
    unsigned qu_seed = 0;
    bool qu_certify = false;
    auto* qu_construct = quintic->add_subcommand("construct", "build the quintic for a seed");
    qu_construct->add_option("--seed", qu_seed, "selection seed (default 0)");
    qu_construct->add_flag("--certify", qu_certify,
                           "also run the eliminate-mode smoothness certificate");
    auto* qu_verify =
        quintic->add_subcommand("verify", "full non-collinearity verification report");
    qu_verify->add_option("--seed", qu_seed, "selection seed (default 0)");

    std::vector<std::string> argv_strings;
    argv_strings.push_back("symprod");
    argv_strings.insert(argv_strings.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_strings.size());
    for (auto& s : argv_strings) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        res.json_output = json_flag;

        if (ns_intersect->parsed()) {
            res.command = "ns intersect";
            const Json classes = parse_json_text(ns_classes);
            if (!classes.is_array())
                throw std::domain_error("--classes must be a JSON array of [xi, theta] pairs");
            res.inputs["g"] = ns_g;
            res.inputs["n"] = ns_n;
            res.inputs["classes"] = classes;
            const SymmetricProductSpace space(ns_g, ns_n);
            std::vector<DivisorClass> cls;
            for (const auto& entry : classes) {
                if (!entry.is_array() || entry.size() != 2)
                    throw std::domain_error("each class must be a [xi, theta] pair");
                cls.emplace_back(space, int_from_json(entry[0]), int_from_json(entry[1]));
            }
            res.outputs["value"] = json_int(top_intersection(cls));
        } else if (ns_degree->parsed()) {
            res.command = "ns degree";
            const Int d = parse_int_arg(ns_d);
            res.inputs["kind"] = ns_kind;
            res.inputs["g"] = ns_g;
            res.inputs["n"] = ns_n;
            res.inputs["d"] = json_int(d);
            const SymmetricProductSpace space(ns_g, ns_n);
            res.outputs["value"] =
                json_int(ns_kind == "sym" ? sym_degree(space, d) : alt_degree(space, d));
        } else if (se_maxr9->parsed()) {
            res.command = "series max-r9";
            res.inputs["g"] = se_g;
            res.inputs["hyperelliptic"] = se_hyp;
            res.inputs["trigonal"] = se_trig;
            res.outputs["r"] = max_r_degree9(CurveClass(se_g, se_hyp, se_trig));
        } else if (se_cast->parsed()) {
            res.command = "series castelnuovo";
            const Int d = parse_int_arg(se_d);
            res.inputs["d"] = json_int(d);
            res.inputs["r"] = se_r;
            res.outputs["bound"] = json_int(castelnuovo_genus_bound(d, se_r));
        } else if (se_search->parsed()) {
            res.command = "series search";
            const Int dmax = se_dmax.empty() ? Int(se_gmax + 10) : parse_int_arg(se_dmax);
            res.inputs["g_min"] = se_gmin;
            res.inputs["g_max"] = se_gmax;
            res.inputs["d_max"] = json_int(dmax);
            res.inputs["workers"] = default_worker_count();
            res.outputs =
                to_json(min_alt_embedding_degree_search(se_gmin, se_gmax, dmax,
                                                        default_worker_count()));
        } else if (em_phi->parsed()) {
            res.command = "embed phi";
            const Json dj = parse_inline_or_file(em_divisor);
            res.inputs["divisor"] = dj;
            res.outputs["point"] = to_json(phi3(divisor3_from_json(dj)));
        } else if (em_ver->parsed()) {
            res.command = "embed veronese";
            const Json pj = parse_json_text(em_point);
            res.inputs["point"] = pj;
            res.outputs["point"] = to_json(veronese3(point_from_json(pj)));
        } else if (em_col->parsed()) {
            res.command = "embed collinear";
            const Json pj = parse_json_text(em_points);
            if (!pj.is_array() || pj.size() != 3)
                throw std::domain_error("--points must hold exactly three P^9 points");
            res.inputs["points"] = pj;
            const std::array<ProjectivePoint, 3> pts{point_from_json(pj[0]),
                                                     point_from_json(pj[1]),
                                                     point_from_json(pj[2])};
            const int rk = collinear_p10_rank(pts);
            res.outputs["rank"] = rk;
            res.outputs["collinear"] = rk <= 2;
        } else if (qu_construct->parsed()) {
            res.command = "quintic construct";
            res.inputs["seed"] = qu_seed;
            res.inputs["certify"] = qu_certify;
            const QuinticConstruction qc = construct_quintic(qu_seed);
            res.outputs = to_json(qc);
            if (qu_certify) {
                Json sing = Json::array();
                for (const auto& p :
                     singular_points_search(qc.quintic, SingularSearchMode::eliminate))
                    sing.push_back(to_json(p));
                res.outputs["singular_points"] = std::move(sing);
            }
        } else if (qu_verify->parsed()) {
            res.command = "quintic verify";
            res.inputs["seed"] = qu_seed;
            res.outputs = to_json(verify_quintic_noncollinearity(qu_seed));
        }
        return res;
    } catch (const CLI::CallForHelp&) {
        res.command = "help";
        res.json_output = json_flag;
        res.outputs["help"] = app.help();
        res.exit_code = 0;
        return res;
    } catch (const CLI::ParseError& e) {
        res.exit_code = 2;
        res.error_code = "usage_error";
        res.error_message = e.what();
        return res;
    } catch (const resource_error& e) {
        res.exit_code = 4;
        res.error_code = "resource_error";
        res.error_message = e.what();
        return res;
    } catch (const std::domain_error& e) {
        res.exit_code = 3;
        res.error_code = "domain_error";
        res.error_message = e.what();
        return res;
    } catch (const std::exception& e) {
        res.exit_code = 1;
        res.error_code = "internal_error";
        res.error_message = e.what();
        return res;
    }
}

}  // namespace symprod
