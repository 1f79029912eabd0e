#include "autoflow/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "autoflow/flow.hpp"
#include "autoflow/verify.hpp"

namespace autoflow::cli {

namespace {

std::vector<std::string_view> split_top(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        else if (c == ',' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<Value> parse_bracket_values(const Ring &ring, std::string_view text) {
    std::string_view t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError("expected a bracketed list, got '" + std::string(text) + "'");
    std::vector<Value> out;
    for (auto part : split_top(t.substr(1, t.size() - 2))) {
        part = trim(part);
        if (part.size() >= 2 && part.front() == '"' && part.back() == '"')
            part = part.substr(1, part.size() - 2);
        out.push_back(ring.parse(part));
    }
    return out;
}

bool plain_integer(const std::string &s) {
    if (s.empty())
        return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

/// Compact bracketed sequence; integer-shaped elements stay bare so the
/// output is valid JSON for every supported ring.
std::string sequence_text(const Ring &ring, const std::vector<Value> &values) {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ",";
        std::string r = ring.render(values[i]);
        out += plain_integer(r) ? r : "\"" + r + "\"";
    }
    out += "]";
    return out;
}

nlohmann::json sequence_json(const Ring &ring, const std::vector<Value> &values) {
    auto arr = nlohmann::json::array();
    for (const auto &v : values)
        arr.push_back(ring.render(v));
    return arr;
}

int run_bell(const std::string &mode, const std::string &ring_name, int n, int k,
             const std::string &b_text, const std::string &a_text,
             std::ostream &out) {
    Ring R = Ring::make(ring_name);
    std::vector<Value> b = parse_bracket_values(R, b_text);
    nlohmann::json j;
    j["ring"] = R.spec()->to_string();
    j["n"] = n;
    if (mode == "partial") {
        j["k"] = k;
        j["value"] = R.render(partial_bell(R, n, k, b));
    } else {
        std::vector<Value> a = parse_bracket_values(R, a_text);
        j["value"] = R.render(complete_bell(R, n, b, a));
    }
    out << j.dump() << "\n";
    return 0;
}

int run_autonomous(const std::string &mode, const std::string &ring_name,
                   const std::string &seq_text, const std::string &output,
                   std::ostream &out) {
    Ring R = Ring::make(ring_name);
    CoefficientSequence x{R, parse_bracket_values(R, seq_text)};
    if (mode == "apply") {
        auto img = apply_pointwise(x).terms;
        if (output == "json")
            out << sequence_json(R, img).dump() << "\n";
        else
            out << sequence_text(R, img) << "\n";
        return 0;
    }
    auto result = invert(x);
    const Ring &F = result.x.ring;
    if (output == "json") {
        nlohmann::json j;
        j["in_ring"] = result.in_ring;
        j["x"] = sequence_json(F, result.x.terms);
        out << j.dump() << "\n";
    } else {
        out << "{\"in_ring\":" << (result.in_ring ? "true" : "false")
            << ",\"x\":" << sequence_text(F, result.x.terms) << "}\n";
    }
    return 0;
}

int run_homogiety_solve(const std::string &ring_name, int k, std::ostream &out) {
    Ring R = Ring::make(ring_name);
    nlohmann::json j;
    j["ring"] = R.spec()->to_string();
    j["k"] = k;
    if (k == 1) {
        auto d = h1_describe(R);
        j["finite"] = d.finite;
        j["symbolic"] = d.symbolic;
        auto arr = nlohmann::json::array();
        for (const auto &u : d.units)
            arr.push_back(R.render(u));
        j["units"] = arr;
        out << j.dump() << "\n";
        return 0;
    }
    auto pairs = solve_hk(R, k);
    auto st = group_structure(R, pairs);
    auto arr = nlohmann::json::array();
    std::set<std::pair<std::string, std::string>> computed_set;
    for (const auto &p : pairs) {
        arr.push_back(nlohmann::json::array({R.render(p.a), R.render(p.b)}));
        computed_set.insert({R.render(p.a), R.render(p.b)});
    }
    j["pairs"] = arr;
    j["order"] = st.order.convert_to<long long>();
    auto factors = nlohmann::json::array();
    for (const auto &d : st.invariant_factors)
        factors.push_back(d.convert_to<long long>());
    j["invariant_factors"] = factors;
    j["exponent"] = st.exponent.convert_to<long long>();
    j["structure"] = structure_name(st);

    auto claim = paper_claim(R, k);
    if (claim) {
        nlohmann::json cj;
        cj["structure"] = claim->structure;
        if (claim->pairs_known) {
            auto cp = nlohmann::json::array();
            for (const auto &[a, b] : claim->pairs)
                cp.push_back(nlohmann::json::array({a, b}));
            cj["pairs"] = cp;
        }
        j["paper_claim"] = cj;
        bool pairs_match = true;
        if (claim->pairs_known) {
            std::set<std::pair<std::string, std::string>> claim_set(
                claim->pairs.begin(), claim->pairs.end());
            pairs_match = (claim_set == computed_set);
        }
        bool structure_match =
            claim->structure.empty() || claim->structure == structure_name(st);
        j["agreement"] = pairs_match && structure_match;
    } else {
        j["paper_claim"] = nullptr;
        j["agreement"] = nullptr;
    }
    out << j.dump() << "\n";
    return 0;
}

std::vector<std::complex<double>> parse_grid(const std::string &text) {
    // start:end:steps -> steps+1 evenly spaced real points
    auto first = text.find(':');
    auto second = text.find(':', first == std::string::npos ? 0 : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw ParseError("grid must be start:end:steps, got '" + text + "'");
    double start = std::stod(text.substr(0, first));
    double end = std::stod(text.substr(first + 1, second - first - 1));
    int steps = std::stoi(text.substr(second + 1));
    if (steps < 1)
        throw ParseError("grid needs at least one step");
    std::vector<std::complex<double>> grid;
    grid.reserve(static_cast<size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i)
        grid.emplace_back(start + (end - start) * i / steps, 0.0);
    return grid;
}

int run_flow(const std::string &mode, const std::string &ring_name,
             const std::string &field_text, const std::string &x0_text, int order,
             const std::string &grid_text, const std::string &out_path,
             int precision, const std::string &output, std::ostream &out) {
    Ring R = Ring::make(ring_name);
    Ring F = R.fraction_ring();
    VectorField field = VectorField::parse(R, field_text);
    Value x0 = F.parse(x0_text);

    if (mode == "series" || mode == "closed") {
        FlowSeries flow = mode == "series" ? flow_at_point(field, x0, order)
                                           : closed_form_flow(field, x0, order);
        if (output == "json")
            out << sequence_json(F, flow.t_coeffs).dump() << "\n";
        else
            out << sequence_text(F, flow.t_coeffs) << "\n";
        return 0;
    }
    if (mode == "orbit") {
        FlowSeries flow = flow_at_point(field, x0, order);
        auto rows = orbit_samples(flow, parse_grid(grid_text));
        std::string csv = orbit_csv(rows, precision);
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f)
                throw Error("cannot open --out file " + out_path);
            f << csv;
        } else {
            out << csv;
        }
        return 0;
    }
    // mode == "check": the identity suite for this field
    bool ok = true;
    auto report = [&](const std::string &name, bool pass) {
        out << (pass ? "PASS " : "FAIL ") << name << "\n";
        ok = ok && pass;
    };
    int half = std::max(2, order / 2);
    report("group-law(" + std::to_string(half) + "," + std::to_string(half) + ")",
           group_law_check(field, x0, half, half));
    report("pde-identities", pde_check(field, x0, std::max(2, std::min(order, 5))));
    report("time-scale", time_scale_check(field, x0, F.from_int(2), order) &&
                             time_scale_check(field, x0, F.zero(), order));
    if (field.kind != VectorField::Kind::Series) {
        FlowSeries direct = flow_at_point(field, x0, order);
        FlowSeries closed = closed_form_flow(field, x0, order);
        bool same = true;
        for (int n = 0; n <= order; ++n)
            same = same && F.eq(direct.t_coeffs[static_cast<size_t>(n)],
                                closed.t_coeffs[static_cast<size_t>(n)]);
        report("closed-form-match", same);
    }
    out << (ok ? "all flow checks passed" : "flow checks FAILED") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"exact autonomous-flow algebra over integral domains"};
    app.require_subcommand(1);

    std::string output;
    app.add_option("--output", output, "output format override (json|text|csv)");

    // bell
    auto *bell_cmd = app.add_subcommand("bell", "Bell polynomial tables");
    bell_cmd->require_subcommand(1);
    int bell_n = 1, bell_k = 1;
    std::string bell_b, bell_a, bell_ring = "z";
    auto *bell_partial = bell_cmd->add_subcommand("partial", "partial Bell B_{n,k}");
    auto *bell_complete = bell_cmd->add_subcommand("complete", "complete Bell Y_n");
    for (auto *c : {bell_partial, bell_complete}) {
        c->add_option("--ring", bell_ring, "ring spec");
        c->add_option("--n", bell_n, "n")->required();
        c->add_option("--b", bell_b, "b arguments, e.g. [1,1,1]")->required();
    }
    bell_partial->add_option("--k", bell_k, "k")->required();
    bell_complete->add_option("--a", bell_a, "a arguments")->required();

    // autonomous
    auto *auto_cmd = app.add_subcommand("autonomous", "the sequence operator");
    auto_cmd->require_subcommand(1);
    std::string auto_ring = "z", auto_seq;
    auto *auto_apply = auto_cmd->add_subcommand("apply", "apply the operator");
    auto *auto_invert = auto_cmd->add_subcommand("invert", "invert the operator");
    for (auto *c : {auto_apply, auto_invert}) {
        c->add_option("--ring", auto_ring, "ring spec");
        c->add_option("--seq", auto_seq, "sequence, e.g. [1,1,1,1,1]")->required();
    }

    // homogeneity
    auto *hom_cmd = app.add_subcommand("homogeneity", "homogeneity groups");
    hom_cmd->require_subcommand(1);
    std::string hom_ring = "z";
    int hom_k = 2;
    auto *hom_solve = hom_cmd->add_subcommand("solve", "solve H_k over a ring");
    hom_solve->add_option("--ring", hom_ring, "ring spec")->required();
    hom_solve->add_option("--k", hom_k, "homogeneity degree (1 lists H_1)")->required();

    // flow
    auto *flow_cmd = app.add_subcommand("flow", "flows of x' = f(x)");
    flow_cmd->require_subcommand(1);
    std::string flow_ring = "q", flow_field, flow_x0 = "0", flow_grid = "0:1:10",
                flow_out;
    int flow_order = 6, flow_precision = 12;
    auto *flow_series = flow_cmd->add_subcommand("series", "flow coefficients");
    auto *flow_closed = flow_cmd->add_subcommand("closed", "closed-form coefficients");
    auto *flow_orbit = flow_cmd->add_subcommand("orbit", "sampled orbit CSV");
    auto *flow_check = flow_cmd->add_subcommand("check", "identity checks");
    for (auto *c : {flow_series, flow_closed, flow_orbit, flow_check}) {
        c->add_option("--ring", flow_ring, "ring spec");
        c->add_option("--field", flow_field,
                      "const:a | affine:a,b | expfield:a | series:[c0,c1,...]")
            ->required();
        c->add_option("--x0", flow_x0, "base point (fraction-field element)");
        c->add_option("--order", flow_order, "truncation order");
    }
    flow_orbit->add_option("--grid", flow_grid, "time grid start:end:steps");
    flow_orbit->add_option("--out", flow_out, "write CSV here instead of stdout");
    flow_orbit->add_option("--precision", flow_precision, "CSV significant digits");

    // verify
    auto *verify_cmd = app.add_subcommand("verify", "invariant suites");
    verify_cmd->require_subcommand(1);
    std::string verify_ring = "q";
    int verify_order = 6;
    auto *verify_all_cmd = verify_cmd->add_subcommand("all", "run the full suite");
    verify_all_cmd->add_option("--ring", verify_ring, "ring spec");
    verify_all_cmd->add_option("--order", verify_order, "truncation order");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (bell_partial->parsed())
            return run_bell("partial", bell_ring, bell_n, bell_k, bell_b, bell_a, out);
        if (bell_complete->parsed())
            return run_bell("complete", bell_ring, bell_n, bell_k, bell_b, bell_a, out);
        if (auto_apply->parsed())
            return run_autonomous("apply", auto_ring, auto_seq, output, out);
        if (auto_invert->parsed())
            return run_autonomous("invert", auto_ring, auto_seq, output, out);
        if (hom_solve->parsed())
            return run_homogiety_solve(hom_ring, hom_k, out);
        const std::pair<CLI::App *, const char *> flow_modes[] = {
            {flow_series, "series"},
            {flow_closed, "closed"},
            {flow_orbit, "orbit"},
            {flow_check, "check"}};
        for (const auto &[c, name] : flow_modes) {
            if (c->parsed())
                return run_flow(name, flow_ring, flow_field, flow_x0, flow_order,
                                flow_grid, flow_out, flow_precision, output, out);
        }
        if (verify_all_cmd->parsed()) {
            Ring R = Ring::make(verify_ring);
            auto results = verify_all(R, verify_order);
            bool pass = print_results(results, out);
            return pass ? 0 : 1;
        }
    } catch (const ParseError &e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        err << e.what() << "\n";
        return 3;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace autoflow::cli
