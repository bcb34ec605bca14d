#include "app.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "nashlift/identity.hpp"
#include "nashlift/io.hpp"

namespace nashlift::app {

using json = nlohmann::json;

namespace {

constexpr int kDefaultTrunc = 64;

json strings(const std::vector<Polynomial>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

json valuation_json(const Valuation& v) {
    if (v.is_finite()) return v.value;
    return v.to_string();
}

json chart_json(const AffineChart& c) {
    return {{"vars", c.ring()->names()}, {"ideal", strings(c.ideal().generators())}, {"dim", c.dim()}};
}

json arc_json(const Arc& a) {
    json comps = json::array();
    for (std::size_t v = 0; v < a.components.size(); ++v)
        comps.push_back({{"var", a.chart->ring()->name(v)}, {"series", a.components[v].to_string()}});
    return {{"components", comps}, {"truncation", a.truncation()}, {"exact", a.exact()}};
}

json fractional_json(const FractionalIdeal& f) {
    json den = json::array();
    for (const auto& [base, e] : f.denominator()) den.push_back({{"base", base.to_string()}, {"exponent", e}});
    return {{"numerators", strings(f.numerators())}, {"denominator", den}};
}

json point_json(const std::vector<Rational>& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(to_string(c));
    return a;
}

std::string join(const json& arr, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) s += sep;
        s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
    }
    return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string val_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

struct Job {
    const JobSpec& spec;
    VarietyFile variety;
    std::optional<Arc> arc;
    int trunc = kDefaultTrunc;
    json hypotheses;

    std::optional<std::vector<std::size_t>> frame() const {
        if (spec.frame.empty()) return std::nullopt;
        std::vector<std::size_t> cols;
        for (const auto& name : spec.frame) {
            auto idx = variety.chart->ring()->index_of(name);
            if (!idx) throw Error(ErrorKind::Argument, "--frame names unknown variable '" + name + "'");
            cols.push_back(*idx);
        }
        return cols;
    }

    LadderOptions ladder_options() const { return {GaussOptions{spec.seed, 5}, frame()}; }
    GaussOptions gauss() const { return {spec.seed, 5}; }

    void check_arc_hypothesis() {
        if (!lies_on_chart(*arc)) throw Error(ErrorKind::Argument, "the arc does not lie on the variety");
        require_smooth_generic_point(*arc);
        hypotheses["nonsingular_point_on_image"] = true;
    }
};

void validate(const JobSpec& s) {
    if (std::find(commands().begin(), commands().end(), s.command) == commands().end())
        throw Error(ErrorKind::Argument, "unknown command '" + s.command + "'");
    if (s.max_iter < 1 || s.max_iter > 64) throw Error(ErrorKind::Argument, "--max-iter must lie in 1..64");
    if (s.depth < 0 || s.depth > 8) throw Error(ErrorKind::Argument, "--depth must lie in 0..8");
    if (s.trunc && (*s.trunc < 1 || *s.trunc > 4096))
        throw Error(ErrorKind::Argument, "--trunc must lie in 1..4096");
    if (s.n < 1 || s.n > 6) throw Error(ErrorKind::Argument, "--n must lie in 1..6");
    if (s.trials < 0 || s.trials > 100000) throw Error(ErrorKind::Argument, "--trials must lie in 0..100000");
    if (s.format != "text" && s.format != "json")
        throw Error(ErrorKind::Argument, "--format must be text or json");
    bool needs_variety = s.command != "dlog-check";
    bool needs_arc = s.command == "lift" || s.command == "criterion" || s.command == "probe";
    if (needs_variety && s.variety.empty()) throw Error(ErrorKind::Argument, s.command + " needs a variety file");
    if (needs_arc && s.arc.empty()) throw Error(ErrorKind::Argument, s.command + " needs an arc file");
}

Arc with_order(const Arc& a, int order) {
    Arc out{a.chart, {}};
    for (const auto& s : a.components)
        out.components.push_back(s.exact() ? TruncatedSeries(s.coefficients(), order, true)
                                           : s.truncated(std::min(order, s.order())));
    return out;
}

// ---- commands ---------------------------------------------------------------

json cmd_smooth(Job& job) {
    const auto& chart = *job.variety.chart;
    bool smooth = is_smooth(chart);
    return {{"smooth", smooth},
            {"empty", chart.is_empty()},
            {"singular_locus", strings(singular_locus(chart).groebner())}};
}

json cmd_nash(Job& job) {
    auto nb = nash_blowup(job.variety.chart, job.gauss());
    json charts = json::array();
    for (const auto& bc : nb.charts) {
        charts.push_back({{"path", "root/k" + std::to_string(bc.selected)},
                          {"selected", bc.selected},
                          {"chart", chart_json(*bc.chart)},
                          {"smooth", is_smooth(*bc.chart)},
                          {"parent_map", strings(bc.chart->parent()->coordinates)},
                          {"exceptional", bc.exceptional.to_string()}});
    }
    return {{"gauss_path", nb.path.to_string()}, {"center", fractional_json(nb.center)}, {"charts", charts}};
}

json cmd_tower(Job& job) {
    auto r = iterate_until_smooth(job.variety.chart, job.spec.max_iter, job.gauss());
    json nodes = json::array();
    for (const auto& n : r.nodes) {
        json node{{"path", n.path}, {"level", n.level}, {"smooth", n.smooth}, {"chart", chart_json(*n.chart)}};
        if (n.gauss) node["gauss_path"] = n.gauss->to_string();
        nodes.push_back(node);
    }
    return {{"smooth_level", r.smooth_level ? json(*r.smooth_level) : json(nullptr)},
            {"max_iter", r.max_iter},
            {"hit_max_iter", r.hit_max_iter},
            {"charts_per_level", r.charts_per_level},
            {"nodes", nodes}};
}

json frame_json(const DifferentialFrame& f) {
    return {{"basis", f.basis_names()}, {"certificate", f.certificate.to_string()}};
}

json cmd_ladder(Job& job) {
    auto ladder = build_ladder(job.variety.chart, job.spec.depth, job.ladder_options());
    json entries = json::array();
    for (int i = 0; i <= ladder.depth(); ++i) {
        json e = fractional_json(ladder.entries[static_cast<std::size_t>(i)]);
        e["index"] = ladder.index_of_entry(i);
        entries.push_back(e);
    }
    return {{"n", ladder.n},
            {"depth", ladder.depth()},
            {"frame", frame_json(ladder.frame)},
            {"gauss_path", ladder.gauss.to_string()},
            {"entries", entries}};
}

json cmd_lift(Job& job) {
    job.check_arc_hypothesis();
    const Arc& arc = *job.arc;
    if (job.variety.center) {
        FractionalIdeal center(job.variety.chart, *job.variety.center);
        auto charts = blowup_charts(job.variety.chart, center);
        auto lift = lift_through_blowup(arc, center, charts);
        const auto& bc = charts[lift.chart];
        return {{"mode", "center"},
                {"center", fractional_json(center)},
                {"path", "root/k" + std::to_string(bc.selected)},
                {"chart", chart_json(*bc.chart)},
                {"loss", lift.loss},
                {"lifted_arc", arc_json(lift.arc)},
                {"round_trip", round_trip_holds(lift.arc, arc)}};
    }
    auto r = lift_through_tower(arc, job.spec.max_iter, job.gauss());
    json steps = json::array();
    bool round_trip = true;
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const auto& s = r.steps[i];
        json step{{"path", s.path},
                  {"level", static_cast<int>(i)},
                  {"chart", chart_json(*s.arc.chart)},
                  {"center", point_json(s.arc.center())},
                  {"smooth_at_center", s.smooth_at_center},
                  {"arc", arc_json(s.arc)}};
        if (s.gauss) step["gauss_path"] = s.gauss->to_string();
        if (s.selected) {
            step["selected"] = *s.selected;
            step["loss"] = s.loss;
        }
        if (i > 0) round_trip = round_trip && round_trip_holds(s.arc, r.steps[i - 1].arc);
        steps.push_back(step);
    }
    return {{"mode", "tower"},
            {"success", r.success},
            {"level", r.level()},
            {"max_levels", r.max_levels},
            {"round_trip", round_trip},
            {"steps", steps}};
}

json cmd_criterion(Job& job) {
    job.check_arc_hypothesis();
    auto ladder = build_ladder(job.variety.chart, job.spec.depth, job.ladder_options());
    auto r = geometric_criterion_test(*job.arc, ladder);
    json values = json::array();
    for (const auto& v : r.values) values.push_back(valuation_json(v));
    json indices = json::array();
    for (int i = 1; i <= ladder.depth(); ++i) indices.push_back(ladder.index_of_entry(i));
    return {{"n", r.n},
            {"depth", r.depth},
            {"frame", frame_json(ladder.frame)},
            {"base_valuation", valuation_json(r.base)},
            {"indices", indices},
            {"valuations", values},
            {"verdict", to_string(r.verdict)},
            {"onset", r.onset ? json(*r.onset) : json(nullptr)},
            {"ratio", r.onset ? json(r.ratio) : json(nullptr)},
            {"divergent_index", r.divergent_index ? json(*r.divergent_index) : json(nullptr)},
            {"truncation_adequate", r.truncation_adequate}};
}

json cmd_probe(Job& job) {
    job.check_arc_hypothesis();
    auto r = stable_transform_probe(*job.arc, job.spec.max_iter, job.gauss());
    json levels = json::array();
    for (const auto& l : r.levels)
        levels.push_back({{"level", l.level},
                          {"path", l.path},
                          {"center", point_json(l.center)},
                          {"smooth_at_center", l.smooth_at_center}});
    std::string verdict = r.stable_level ? "stable-by-level-" + std::to_string(*r.stable_level)
                                         : "undetermined-at-depth-" + std::to_string(r.max_levels);
    return {{"levels", levels},
            {"stable_level", r.stable_level ? json(*r.stable_level) : json(nullptr)},
            {"max_levels", r.max_levels},
            {"verdict", verdict}};
}

json cmd_dlog(Job& job) {
    ChartPtr chart = job.variety.chart ? job.variety.chart : identity_chart(job.spec.n);
    auto frame = differential_frame(chart, job.variety.chart ? job.frame() : std::nullopt);
    std::mt19937_64 rng(job.spec.seed);
    int passed = 0, dlog = 0, conn = 0, hom = 0;
    for (int i = 0; i < job.spec.trials; ++i) {
        auto t = run_identity_trial(frame, rng);
        passed += t.all();
        dlog += t.dlog;
        conn += t.connection;
        hom += t.homogeneity;
    }
    return {{"n", chart->dim()},
            {"chart", chart_json(*chart)},
            {"frame", frame_json(frame)},
            {"trials", job.spec.trials},
            {"passed", passed},
            {"dlog", dlog},
            {"connection", conn},
            {"homogeneity", hom}};
}

// ---- text rendering ---------------------------------------------------------

std::string chart_text(const json& c) {
    return "vars " + join(c["vars"], " ") + "; ideal " + (c["ideal"].empty() ? "0" : join(c["ideal"])) +
           "; dim " + c["dim"].dump();
}

std::string fractional_text(const json& f) {
    std::string s = "(" + join(f["numerators"]) + ")";
    if (!f["denominator"].empty()) {
        s += " / ";
        for (std::size_t i = 0; i < f["denominator"].size(); ++i) {
            const auto& d = f["denominator"][i];
            if (i) s += " * ";
            s += "(" + d["base"].get<std::string>() + ")";
            if (d["exponent"] != 1) s += "^" + d["exponent"].dump();
        }
    }
    return s;
}

void arc_text(std::ostream& out, const json& a, const std::string& indent) {
    for (const auto& c : a["components"])
        out << indent << c["var"].get<std::string>() << " = " << c["series"].get<std::string>() << "\n";
}

void render_text(std::ostream& out, const json& doc) {
    const json& r = doc["result"];
    const std::string cmd = doc["command"];
    const json& h = doc["hypotheses"];
    out << "nashlift " << doc["version"].get<std::string>() << "  command=" << cmd
        << "  seed=" << doc["seed"].dump() << "  truncation=" << doc["truncation"].dump() << "\n";
    out << "hypotheses: normality " << h["normality"].get<std::string>() << "; radical/equidimensional "
        << h["radical_equidimensional"].get<std::string>() << "; jacobian degenerate "
        << yes_no(h["jacobian_degenerate"].get<bool>()) << "; nonsingular point on image "
        << (h["nonsingular_point_on_image"].is_null() ? "not checked" : "verified") << "\n";
    if (h["jacobian_degenerate"].get<bool>())
        out << "warning: the singular locus is the whole chart; the ideal may not be radical\n";

    if (cmd == "smooth") {
        out << "smooth: " << yes_no(r["smooth"]) << (r["empty"].get<bool>() ? " (empty chart)" : "") << "\n";
        out << "singular locus: (" << join(r["singular_locus"]) << ")\n";
    } else if (cmd == "nash") {
        out << "gauss minors: " << r["gauss_path"].get<std::string>() << "\n";
        out << "center: " << fractional_text(r["center"]) << "\n";
        for (const auto& c : r["charts"]) {
            out << c["path"].get<std::string>() << ": " << chart_text(c["chart"]) << "; "
                << (c["smooth"].get<bool>() ? "smooth" : "singular") << "\n";
            out << "  parent map: ";
            const auto& names = doc["parent_vars"];
            for (std::size_t i = 0; i < c["parent_map"].size(); ++i)
                out << (i ? ", " : "") << names[i].get<std::string>() << " = "
                    << c["parent_map"][i].get<std::string>();
            out << "\n  exceptional: " << c["exceptional"].get<std::string>() << "\n";
        }
    } else if (cmd == "tower") {
        for (const auto& n : r["nodes"])
            out << "level " << n["level"].dump() << "  " << n["path"].get<std::string>() << "  "
                << (n["smooth"].get<bool>() ? "smooth" : "singular") << "  " << chart_text(n["chart"]) << "\n";
        if (r["smooth_level"].is_null())
            out << "not smooth after " << r["max_iter"].dump() << " levels\n";
        else
            out << "smooth at level " << r["smooth_level"].dump() << "\n";
    } else if (cmd == "ladder") {
        out << "frame: basis " << join(r["frame"]["basis"]) << "; certificate "
            << r["frame"]["certificate"].get<std::string>() << "\n";
        out << "gauss minors: " << r["gauss_path"].get<std::string>() << "\n";
        for (const auto& e : r["entries"])
            out << "F_" << e["index"].dump() << " = " << fractional_text(e) << "\n";
    } else if (cmd == "lift") {
        if (r["mode"] == "center") {
            out << "center: " << fractional_text(r["center"]) << "\n";
            out << "lifted to " << r["path"].get<std::string>() << " (" << chart_text(r["chart"])
                << "), loss " << r["loss"].dump() << "\n";
            arc_text(out, r["lifted_arc"], "  ");
        } else {
            for (const auto& s : r["steps"]) {
                out << "level " << s["level"].dump() << "  " << s["path"].get<std::string>() << "  center ("
                    << join(s["center"]) << ")  " << (s["smooth_at_center"].get<bool>() ? "smooth" : "singular");
                if (s.contains("selected"))
                    out << "  -> k" << s["selected"].dump() << ", loss " << s["loss"].dump();
                out << "\n";
            }
            const auto& last = r["steps"].back();
            if (r["success"].get<bool>())
                out << "lift stabilized at level " << r["level"].dump() << " on " << last["path"].get<std::string>()
                    << "\n";
            else
                out << "no smooth center within " << r["max_levels"].dump() << " levels\n";
            out << "lifted arc:\n";
            arc_text(out, last["arc"], "  ");
        }
        out << "round trip: " << (r["round_trip"].get<bool>() ? "exact" : "FAILED") << "\n";
    } else if (cmd == "criterion") {
        out << "frame: basis " << join(r["frame"]["basis"]) << "\n";
        out << "v_0 (F_1) = " << val_text(r["base_valuation"]) << "\n";
        for (std::size_t i = 0; i < r["valuations"].size(); ++i)
            out << "v_" << i + 1 << " (F_" << r["indices"][i].dump() << ") = " << val_text(r["valuations"][i])
                << "\n";
        out << "verdict: " << r["verdict"].get<std::string>();
        if (!r["onset"].is_null()) out << " ratio " << r["ratio"].dump() << " (onset v_" << r["onset"].dump() << ")";
        if (!r["divergent_index"].is_null()) out << " (v_" << r["divergent_index"].dump() << " infinite)";
        out << "\ntruncation adequate: " << yes_no(r["truncation_adequate"]) << "\n";
    } else if (cmd == "probe") {
        for (const auto& l : r["levels"])
            out << "level " << l["level"].dump() << "  " << l["path"].get<std::string>() << "  center ("
                << join(l["center"]) << ")  " << (l["smooth_at_center"].get<bool>() ? "smooth" : "singular") << "\n";
        if (r["stable_level"].is_null())
            out << "undetermined at depth " << r["max_levels"].dump() << "\n";
        else
            out << "stable by level " << r["stable_level"].dump() << "\n";
    } else if (cmd == "dlog-check") {
        out << "chart: " << chart_text(r["chart"]) << "; frame basis " << join(r["frame"]["basis"]) << "\n";
        out << "dlog " << r["dlog"].dump() << ", connection " << r["connection"].dump() << ", homogeneity "
            << r["homogeneity"].dump() << "\n";
        out << r["passed"].dump() << "/" << r["trials"].dump() << " identities hold\n";
    }
}

} // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        validate(spec);
        Job job{spec, {}, std::nullopt, spec.trunc.value_or(kDefaultTrunc), json::object()};
        job.hypotheses = {{"normality", "assumed"},
                          {"radical_equidimensional", "assumed"},
                          {"jacobian_degenerate", false},
                          {"nonsingular_point_on_image", nullptr}};
        if (!spec.variety.empty()) {
            job.variety = load_variety(spec.variety);
            const auto& chart = *job.variety.chart;
            job.hypotheses["jacobian_degenerate"] =
                !chart.is_empty() && dimension(singular_locus(chart)) == chart.dim();
        }
        if (!spec.arc.empty()) {
            job.arc = load_arc(spec.arc, job.variety.chart, job.trunc);
            if (spec.trunc) job.arc = with_order(*job.arc, *spec.trunc);
            job.trunc = job.arc->truncation();
        }

        json result;
        const std::string& c = spec.command;
        if (c == "smooth") result = cmd_smooth(job);
        else if (c == "nash") result = cmd_nash(job);
        else if (c == "tower") result = cmd_tower(job);
        else if (c == "ladder") result = cmd_ladder(job);
        else if (c == "lift") result = cmd_lift(job);
        else if (c == "criterion") result = cmd_criterion(job);
        else if (c == "probe") result = cmd_probe(job);
        else result = cmd_dlog(job);

        json doc{{"tool", "nashlift"},
                 {"version", kVersion},
                 {"command", c},
                 {"seed", spec.seed},
                 {"truncation", job.trunc},
                 {"inputs", {{"variety", spec.variety}, {"arc", spec.arc}}},
                 {"hypotheses", job.hypotheses},
                 {"result", result}};
        if (spec.format == "json") {
            out << doc.dump(2) << "\n";
        } else {
            if (job.variety.chart) doc["parent_vars"] = job.variety.chart->ring()->names();
            render_text(out, doc);
        }
        return 0;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == ErrorKind::HypothesisViolation ? 2 : 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace nashlift::app
