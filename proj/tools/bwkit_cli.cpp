// bwkit command line: build/export product topologies, evaluate bisection
// bounds and closed forms, run the exhaustive oracle, emit the family
// summary table, and cross-validate formulas against the oracle.
//
//   bwkit topo      --topology torus --dims 4,4
//   bwkit bounds    --topology torus --dims 4,4 --format json
//   bwkit exact     --topology mct --dims 3,3
//   bwkit partition --topology mcx --dims 7,7
//   bwkit bbw       --topology bcube-b --k 3 --d 2 --s 2
//   bwkit table1    --k 4 --d 2 --T 1 --s 1
//   bwkit verify    --max-n 20
//
// Exit codes: 0 success, 2 usage or spec error, 3 oracle size cap exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bwkit/bwkit.hpp"
#include "bwkit/instances.hpp"
#include "bwkit/serialize.hpp"

namespace {

using namespace bwkit;

struct SpecArgs {
    std::string topology;
    std::vector<int64_t> dims;
    std::vector<std::string> factor_names;
    int64_t bcube_k = 0;
    int64_t bcube_d = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--topology", topology,
                        "named family: array|torus|mct|mctp|mcx|mcxr|hamming|bcube-a|bcube-b");
        cmd->add_option("--dims", dims, "per-dimension node counts, e.g. 4,3,2")
            ->delimiter(',');
        cmd->add_option("--factors", factor_names,
                        "per-dimension families for mixes or ad-hoc products, e.g. path,cbt")
            ->delimiter(',');
        cmd->add_option("--k", bcube_k, "BCube nodes per switch");
        cmd->add_option("--d", bcube_d, "BCube dimensions");
    }

    ProductSpec build_spec() const {
        std::vector<FactorSpec> fs;
        if (!factor_names.empty()) {
            if (factor_names.size() != dims.size())
                fail(Errc::BadArgument, "--factors and --dims must have the same arity");
            for (size_t i = 0; i < dims.size(); ++i)
                fs.emplace_back(factor_kind_from_name(factor_names[i]), dims[i]);
            return ProductSpec(fs);
        }
        if (dims.empty()) fail(Errc::BadArgument, "--dims is required");
        fail(Errc::BadArgument, "--factors (or --topology) is required with --dims");
    }

    // Named family when --topology given, ad-hoc product otherwise.
    std::pair<std::optional<CatalogEntry>, ProductSpec> resolve() const {
        if (topology.empty()) {
            ProductSpec spec = build_spec();
            return {std::nullopt, spec};
        }
        Family fam = family_from_name(topology);
        if (fam == Family::BCubeA || fam == Family::BCubeB) {
            int64_t k = bcube_k, d = bcube_d;
            if (k == 0 && !dims.empty()) {
                k = dims[0];
                d = static_cast<int64_t>(dims.size());
                for (int64_t x : dims)
                    if (x != k) fail(Errc::WrongFamilies, "BCube needs one uniform k");
            }
            if (k == 0 || d == 0) fail(Errc::BadArgument, "BCube needs --k and --d");
            std::vector<int64_t> ks(static_cast<size_t>(d), k);
            auto entry = make_catalog_entry(fam, ks);
            return {entry, entry.spec};
        }
        if (dims.empty()) fail(Errc::BadArgument, "--dims is required");
        if (!factor_names.empty()) {
            std::vector<FactorSpec> fs;
            for (size_t i = 0; i < dims.size(); ++i)
                fs.emplace_back(factor_kind_from_name(factor_names[i]), dims[i]);
            auto entry = make_catalog_entry(fam, ProductSpec(fs));
            return {entry, entry.spec};
        }
        if (fam == Family::MCTP || fam == Family::MCXR)
            fail(Errc::BadArgument,
                 std::string(family_name(fam)) + " mixes families; pass --factors");
        auto entry = make_catalog_entry(fam, dims);
        return {entry, entry.spec};
    }
};

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return Rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        BigInt den = 1;
        for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        return Rat(BigInt(digits), den);
    }
    return Rat(BigInt(text));
}

struct Output {
    std::string path;
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) fail(Errc::BadArgument, "cannot open " + path);
        out << text;
    }
};

std::string spec_echo(const ProductSpec& spec) {
    std::ostringstream os;
    os << spec.str() << "  (sorted; n = " << spec.n << ", d = " << spec.d
       << ", alpha = " << spec.alpha << ")";
    return os.str();
}

LowerBound auto_lower(const ProductSpec& spec, const std::string& mode) {
    if (mode == "strict") return lower_bound(spec, BoundMode::Strict);
    if (mode == "generalized") return lower_bound(spec, BoundMode::Generalized);
    return auto_lower_bound(spec);
}

std::string closed_form_str(const ClosedForm& cf) {
    switch (cf.kind) {
        case ClosedForm::Kind::Exact: return cf.exact.str();
        case ClosedForm::Kind::Interval:
            return "[" + rat_str(cf.lo) + ", " + cf.hi.str() + "]";
        case ClosedForm::Kind::None: return "none";
    }
    return "?";
}

int cmd_topo(const SpecArgs& args, const std::string& format, const Output& out) {
    auto [entry, spec] = args.resolve();
    Topology t = cartesian_product(spec);
    if (format == "text") {
        std::ostringstream os;
        os << spec_echo(spec) << "\n"
           << "servers: " << t.servers << "\nedges: " << t.edge_count()
           << "\nhyperedges: " << t.hyperedges.size() << "\nswitches: " << t.switches.size()
           << "\ncut model: " << cut_model_name(t.cut_model) << "\n";
        out.write(os.str());
    } else {
        out.write(topology_json(t).dump(2) + "\n");
    }
    return 0;
}

int cmd_bounds(const SpecArgs& args, const std::string& format, const std::string& mode,
               const Output& out) {
    auto [entry, spec] = args.resolve();
    LowerBound lb = auto_lower(spec, mode);
    BigInt ub = upper_bound(spec);
    ClosedForm cf;
    if (entry) cf = closed_form_bw(*entry);
    if (format == "json") {
        out.write(bound_report_json(spec, lb, ub, cf).dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << spec_echo(spec) << "\n"
       << "psi(alpha) = " << psi(spec).psi << "\n"
       << "lower bound = " << rat_str(lb.value) << " (ceil " << lb.ceiling << ", "
       << (lb.mode == BoundMode::Strict ? "strict" : "generalized") << " mode"
       << (lb.derived_extension ? ", derived extension" : "") << ")\n"
       << "upper bound = " << ub << "\n"
       << "closed form = " << closed_form_str(cf) << "\n";
    out.write(os.str());
    return 0;
}

int cmd_exact(const SpecArgs& args, const std::string& format, int64_t max_n, uint64_t budget,
              int jobs, const Output& out) {
    auto [entry, spec] = args.resolve();
    Topology t = cartesian_product(spec);
    OracleOptions opts;
    opts.max_n = max_n;
    opts.budget = budget;
    opts.jobs = jobs;
    try {
        CutResult res = exact_bisection_width(t, opts);
        if (format == "json") {
            Json j;
            j["bw"] = res.width;
            j["witness"] = res.witness.members;
            j["subsets_examined"] = res.subsets_examined;
            j["model"] = cut_model_name(res.model);
            out.write(j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << spec_echo(spec) << "\n"
               << "BW = " << res.width << " (witness:";
            for (int64_t v : res.witness.members) os << " " << v;
            os << "; subsets examined: " << res.subsets_examined << ")\n";
            out.write(os.str());
        }
        return 0;
    } catch (const Error& e) {
        if (e.code() != Errc::TooLarge) throw;
        LowerBound lb = auto_lower(spec, "auto");
        BigInt ub = upper_bound(spec);
        if (format == "json") {
            Json j;
            j["error"] = "TooLarge";
            j["lower"] = {{"rational", rat_str(lb.value)}, {"ceil", json_int(lb.ceiling)}};
            j["upper"] = json_int(ub);
            out.write(j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "oracle cap exceeded (" << e.what() << ")\n"
               << "bound interval: [" << rat_str(lb.value) << ", " << ub << "]\n";
            out.write(os.str());
        }
        return 3;
    }
}

int cmd_partition(const SpecArgs& args, const std::string& format, const Output& out) {
    auto [entry, spec] = args.resolve();
    Topology t = cartesian_product(spec);
    Partition s = constructive_bisection(spec);
    int64_t cut = cut_size(t, s);
    int64_t n = to_int64(spec.n);
    if (format == "json") {
        Json j;
        j["members"] = s.members;
        j["size"] = s.size();
        j["complement_size"] = n - s.size();
        j["cut"] = cut;
        j["upper_bound"] = json_int(upper_bound(spec));
        out.write(j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << spec_echo(spec) << "\n"
       << "side size = " << s.size() << " (complement " << n - s.size() << ")\n"
       << "cut = " << cut << " (upper bound " << upper_bound(spec) << ")\nmembers:";
    for (int64_t v : s.members) os << " " << v;
    os << "\n";
    out.write(os.str());
    return 0;
}

int cmd_bbw(const SpecArgs& args, const std::string& format, const std::string& T_text,
            const std::string& s_text, const Output& out) {
    auto [entry, spec] = args.resolve();
    CapacityModel cap;
    if (!T_text.empty()) {
        cap.link_T = parse_rat(T_text);
        cap.has_T = true;
    }
    if (!s_text.empty()) {
        cap.switch_s = parse_rat(s_text);
        cap.has_s = true;
    }
    std::ostringstream os;
    Json j;
    if (entry && closed_form_bw(*entry).kind != ClosedForm::Kind::None) {
        BandwidthReport rep = bisection_bandwidth(*entry, cap);
        if (rep.kind == ClosedForm::Kind::Exact) {
            os << "BBW = " << rat_str(rep.exact) << "\n";
            j["bbw"] = rat_str(rep.exact);
        } else {
            os << "BBW in [" << rat_str(rep.lo) << ", " << rat_str(rep.hi) << "]\n";
            j["bbw"] = {rat_str(rep.lo), rat_str(rep.hi)};
        }
    } else {
        // no closed form: scale the generic bound interval by the link model
        if (!cap.has_T) fail(Errc::MissingCapacity, "link topologies need --T");
        LowerBound lb = auto_lower(spec, "auto");
        Rat lo = 2 * cap.link_T * lb.value;
        Rat hi = 2 * cap.link_T * Rat(upper_bound(spec));
        os << "BBW in [" << rat_str(lo) << ", " << rat_str(hi) << "] (from bound interval)\n";
        j["bbw"] = {rat_str(lo), rat_str(hi)};
        j["basis"] = "bounds";
    }
    out.write(format == "json" ? j.dump(2) + "\n" : os.str());
    return 0;
}

std::string render_table1(const std::string& format, int64_t k, int64_t d, const Rat& T,
                          const Rat& s) {
    const auto& rows = table1_rows();
    const bool numeric = k > 0 && d > 0;
    CapacityModel cap;
    cap.link_T = T;
    cap.has_T = true;
    cap.switch_s = s;
    cap.has_s = true;

    auto numeric_cell = [&](const Table1Row& row) -> std::string {
        if (!row.valid_k(k)) return "-";
        BandwidthReport rep = row.bbw_of(k, d, cap);
        if (rep.kind == ClosedForm::Kind::Exact) return rat_str(rep.exact);
        return "[" + rat_str(rep.lo) + ", " + rat_str(rep.hi) + "]";
    };

    std::ostringstream os;
    if (format == "csv") {
        os << "product,factors,beta,cc,bandwidth";
        if (numeric) os << ",instance";
        os << "\n";
        for (const auto& row : rows) {
            os << row.product << "," << row.factors << "," << row.beta_cell << "," << row.cc_cell
               << "," << row.bbw_cell;
            if (numeric) os << "," << numeric_cell(row);
            os << "\n";
        }
        return os.str();
    }
    // markdown (also the text rendering)
    os << "| Product graph | Factor graphs | beta | CC | Bisection bandwidth |";
    if (numeric) os << " BBW(k=" << k << ", d=" << d << ") |";
    os << "\n";
    os << "|---|---|---|---|---|";
    if (numeric) os << "---|";
    os << "\n";
    for (const auto& row : rows) {
        os << "| " << row.product << " | " << row.factors << " | " << row.beta_cell << " | "
           << row.cc_cell << " | " << row.bbw_cell << " |";
        if (numeric) os << " " << numeric_cell(row) << " |";
        os << "\n";
    }
    os << "\n" << table1_footnote() << "\n";
    return os.str();
}

int cmd_verify(int64_t max_n, int jobs, const Output& out) {
    std::ostringstream os;
    bool all_ok = true;
    OracleOptions opts;
    opts.jobs = jobs;
    opts.max_n = std::max<int64_t>(max_n, 26);

    for (Family fam : all_families()) {
        InstanceLimits lim;
        bool bcube = fam == Family::BCubeA || fam == Family::BCubeB;
        lim.max_n = bcube ? std::min<int64_t>(max_n, 16) : max_n;
        int checked = 0, failed = 0;
        std::string detail;
        for (const auto& entry : family_instances(fam, lim)) {
            Topology t = cartesian_product(entry.spec);
            int64_t bw = exact_bisection_width(t, opts).width;
            LowerBound lb = auto_lower(entry.spec, "auto");
            BigInt ub = upper_bound(entry.spec);
            ClosedForm cf = closed_form_bw(entry);
            bool ok = lb.ceiling <= bw && bw <= ub;
            if (cf.kind == ClosedForm::Kind::Exact) ok = ok && bw == cf.exact;
            if (cf.kind == ClosedForm::Kind::Interval)
                ok = ok && cf.lo <= bw && bw <= cf.hi;
            ++checked;
            if (!ok) {
                ++failed;
                if (detail.empty())
                    detail = "  first failure: " + entry.spec.str() + " oracle " +
                             std::to_string(bw) + " closed form " + closed_form_str(cf);
            }
        }
        all_ok = all_ok && failed == 0;
        os << family_name(fam) << ": " << (failed == 0 ? "pass" : "FAIL") << " (" << checked
           << " instances)";
        os << "\n";
        if (!detail.empty()) os << detail << "\n";
    }
    os << (all_ok ? "verify: all families pass\n" : "verify: FAILURES\n");
    out.write(os.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bisection (band)width toolkit for Cartesian-product networks"};
    app.require_subcommand(1);

    std::string format = "text", out_path, mode = "auto", T_text, s_text;
    int64_t max_n = 26, verify_max_n = 20, table_k = 0, table_d = 0;
    uint64_t budget = 0;
    int jobs = 0;
    SpecArgs topo_args, bounds_args, exact_args, part_args, bbw_args;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text|json|csv|md")->capture_default_str();
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* topo = app.add_subcommand("topo", "materialize a topology and export it");
    topo_args.attach(topo);
    add_common(topo);

    auto* bounds = app.add_subcommand("bounds", "lower/upper bounds and closed form");
    bounds_args.attach(bounds);
    add_common(bounds);
    bounds->add_option("--mode", mode, "auto|strict|generalized")->capture_default_str();

    auto* exact = app.add_subcommand("exact", "exhaustive oracle bisection width");
    exact_args.attach(exact);
    add_common(exact);
    exact->add_option("--max-n", max_n, "oracle server cap")->capture_default_str();
    exact->add_option("--budget", budget, "maximum subsets to enumerate");
    exact->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    auto* part = app.add_subcommand("partition", "constructive near-bisection");
    part_args.attach(part);
    add_common(part);

    auto* bbw = app.add_subcommand("bbw", "bisection bandwidth under capacities");
    bbw_args.attach(bbw);
    add_common(bbw);
    bbw->add_option("--T", T_text, "link capacity per direction (int, p/q or decimal)");
    bbw->add_option("--s", s_text, "switch capacity (int, p/q or decimal)");

    auto* table = app.add_subcommand("table1", "summary table of all families");
    add_common(table);
    table->add_option("--k", table_k, "numeric column: nodes per dimension");
    table->add_option("--d", table_d, "numeric column: dimensions");
    table->add_option("--T", T_text, "link capacity for the numeric column");
    table->add_option("--s", s_text, "switch capacity for the numeric column");

    auto* verify = app.add_subcommand("verify", "cross-validate formulas against the oracle");
    add_common(verify);
    verify->add_option("--max-n", verify_max_n, "largest instance size")->capture_default_str();
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    Output out{out_path};
    try {
        if (topo->parsed()) {
            // topology export defaults to the JSON schema
            std::string fmt = topo->count("--format") ? format : "json";
            return cmd_topo(topo_args, fmt, out);
        }
        if (bounds->parsed()) return cmd_bounds(bounds_args, format, mode, out);
        if (exact->parsed()) return cmd_exact(exact_args, format, max_n, budget, jobs, out);
        if (part->parsed()) return cmd_partition(part_args, format, out);
        if (bbw->parsed()) return cmd_bbw(bbw_args, format, T_text, s_text, out);
        if (table->parsed()) {
            Rat T = T_text.empty() ? Rat(1) : parse_rat(T_text);
            Rat s = s_text.empty() ? Rat(1) : parse_rat(s_text);
            std::string fmt = format == "text" ? "md" : format;
            out.write(render_table1(fmt, table_k, table_d, T, s));
            return 0;
        }
        if (verify->parsed()) return cmd_verify(verify_max_n, jobs, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::TooLarge ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
