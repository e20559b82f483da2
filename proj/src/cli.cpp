#include "theta/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "theta/branching.hpp"
#include "theta/codimension.hpp"
#include "theta/factorization.hpp"
#include "theta/identities.hpp"
#include "theta/json_io.hpp"

namespace theta::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError("malformed JSON in " + what + ": " + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    const Json j = parse_json(text, what);
    if (!j.is_array()) throw ValidationError(what + " must be a JSON array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ValidationError(what + " must be a JSON array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

Json envelope(const std::string& command, const std::string& input_hash) {
    return Json{{"tool", kToolName}, {"version", kVersion}, {"command", command}, {"input_hash", input_hash}};
}

std::string args_hash(const std::vector<std::string>& args) {
    std::string joined;
    for (const auto& a : args) {
        joined += a;
        joined.push_back('\0');
    }
    return hash_tag(joined);
}

LeafOracle make_oracle(const std::string& desc) {
    if (desc.rfind("const:", 0) == 0) {
        BigInt v;
        try {
            v = BigInt(desc.substr(6));
        } catch (const std::invalid_argument&) {
            throw ValidationError("oracle constant is not an integer: '" + desc.substr(6) + "'");
        }
        return [v](const ModuliSpec&) { return v; };
    }
    const Json table = parse_json(read_file(desc), desc);
    if (!table.is_object()) throw ValidationError("oracle table must map spec hashes to integers");
    auto values = std::make_shared<std::map<std::string, BigInt>>();
    for (const auto& [k, v] : table.items()) values->emplace(k, bigint_from_json(v));
    return [values](const ModuliSpec& leaf) -> BigInt {
        const auto h = spec_hash(leaf);
        auto it = values->find(h);
        if (it == values->end()) throw std::out_of_range("no oracle entry for leaf " + h);
        return it->second;
    };
}

struct Options {
    std::string format = "json";
    // verify-star / decompose
    std::string spec_path;
    std::optional<int> depth;
    std::string oracle;
    bool inclusive = false;
    // branch
    int rank = 0;
    int power = 0;
    // dims
    std::string partition;
    int vars = 0;
    // codim
    std::string flag, m_list;
    int r1 = 0, genus = 0, points = 0;
    int a = 0, b = 0, p = 0, q = 0;
    // identities
    int max_rank = 5, max_level = 6;
};

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_verify_star(const Options& o, std::ostream& out) {
    const std::string text = read_file(o.spec_path);
    const ModuliSpec spec = spec_from_json(parse_json(text, o.spec_path));
    const auto star = check_star(spec);
    Json rep = envelope("verify-star", hash_tag(text));
    rep["spec_hash"] = spec_hash(spec);
    rep["euler_characteristic"] = spec.euler_characteristic();
    rep["lhs"] = star.lhs;
    rep["rhs"] = star.rhs;
    rep["holds"] = star.holds;
    print(out, rep);
    return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    const std::string text = read_file(o.spec_path);
    const ModuliSpec spec = spec_from_json(parse_json(text, o.spec_path));
    const DecompositionTree tree = build_tree(spec, o.depth.value_or(spec.genus()), o.inclusive);
    std::optional<BigInt> aggregate;
    if (!o.oracle.empty()) aggregate = aggregate_dimension(tree, make_oracle(o.oracle));
    if (o.format == "csv") {
        out << "# " << kToolName << ' ' << kVersion << ' ' << hash_tag(text) << '\n';
        out << tree_to_csv(tree);
        return kOk;
    }
    Json rep = envelope("decompose", hash_tag(text));
    rep["node_count"] = tree.node_count();
    rep["leaf_count"] = tree.leaf_count();
    if (aggregate) rep["aggregate"] = bigint_to_json(*aggregate);
    rep["tree"] = tree_to_json(tree);
    print(out, rep);
    return kOk;
}

int cmd_branch(const Options& o, const std::string& hash, std::ostream& out) {
    if (o.rank <= 0) throw ValidationError("--rank must be positive");
    const auto table = decompose_rectangular(static_cast<std::size_t>(o.rank), o.power);
    const auto id = verify_branching_identity(static_cast<std::size_t>(o.rank), o.power);
    if (o.format == "text") {
        out << "# " << kToolName << ' ' << kVersion << ' ' << hash << '\n';
        out << branching_to_text(table);
        out << "lhs=" << id.lhs.get_str() << " rhs=" << id.rhs.get_str()
            << " equal=" << (id.equal ? "true" : "false") << '\n';
        return kOk;
    }
    Json rep = envelope("branch", hash);
    rep["table"] = branching_to_json(table);
    rep["lhs"] = bigint_to_json(id.lhs);
    rep["rhs"] = bigint_to_json(id.rhs);
    rep["equal"] = id.equal;
    print(out, rep);
    return kOk;
}

int cmd_dims(const Options& o, const std::string& hash, std::ostream& out) {
    const Partition lambda(parse_int_list(o.partition, "--partition"));
    if (o.vars <= 0) throw ValidationError("--vars must be positive");
    Json rep = envelope("dims", hash);
    rep["partition"] = partition_to_json(lambda);
    rep["vars"] = o.vars;
    rep["dim"] = bigint_to_json(dim_schur(lambda, o.vars));
    print(out, rep);
    return kOk;
}

int cmd_codim(const std::string& which, const Options& o, const std::string& hash, std::ostream& out) {
    Json rep = envelope("codim " + which, hash);
    const bool parabolic = o.points > 0;
    if (o.points < 0) throw ValidationError("--points must be nonnegative");
    if (which == "schubert") {
        const StratumDatum datum(o.r1, parse_int_list(o.m_list, "--m"), FlagType(parse_int_list(o.flag, "--flag")));
        rep["codim"] = schubert_codim(datum);
    } else if (which == "quot") {
        const auto b = quot_codim_bounds(o.rank, o.genus, parabolic);
        rep["ss_minus_s"] = b.ss_minus_s;
        rep["f_minus_ss"] = b.f_minus_ss;
    } else if (which == "gps") {
        const auto b = gps_codim_bounds(o.rank, o.genus, parabolic);
        rep["h_minus_ss"] = b.h_minus_ss;
        rep["nonstable"] = b.nonstable;
    } else if (which == "doubledet") {
        rep["dim"] = double_det_dim(o.a, o.b, o.p, o.q, o.rank);
    } else {  // bounds
        const auto qb = quot_codim_bounds(o.rank, o.genus, parabolic);
        const auto gb = gps_codim_bounds(o.rank, o.genus, parabolic);
        const std::vector<std::pair<std::string, std::int64_t>> rows{
            {"quot: semistable minus stable", qb.ss_minus_s},
            {"quot: complement of semistable", qb.f_minus_ss},
            {"gps: complement of semistable", gb.h_minus_ss},
            {"gps: semistable minus stable", gb.nonstable}};
        if (o.format == "text") {
            out << "# " << kToolName << ' ' << kVersion << ' ' << hash << '\n';
            out << "rank=" << o.rank << " genus=" << o.genus << " points=" << o.points << '\n';
            std::size_t w = 0;
            for (const auto& [label, v] : rows) w = std::max(w, label.size());
            for (const auto& [label, v] : rows)
                out << label << std::string(w - label.size() + 2, ' ') << ">= " << v << '\n';
            return kOk;
        }
        Json table = Json::array();
        for (const auto& [label, v] : rows) table.push_back(Json{{"bound", label}, {"codim_at_least", v}});
        rep["rank"] = o.rank;
        rep["genus"] = o.genus;
        rep["points"] = o.points;
        rep["bounds"] = table;
    }
    print(out, rep);
    return kOk;
}

int cmd_identities(const Options& o, const std::string& hash, std::ostream& out) {
    const auto results = run_identity_sweep(o.max_rank, o.max_level, sweep_threads_from_env());
    Json rep = envelope("identities", hash);
    rep["max_rank"] = o.max_rank;
    rep["max_level"] = o.max_level;
    Json sweeps = Json::array();
    bool ok = true;
    for (const auto& r : results) {
        Json s{{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}};
        if (!r.first_failure.empty()) s["first_failure"] = r.first_failure;
        sweeps.push_back(s);
        ok = ok && r.failed == 0;
    }
    rep["sweeps"] = sweeps;
    rep["all_passed"] = ok;
    print(out, rep);
    return ok ? kOk : kSweepFailure;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message,
                 std::optional<Json> extra = std::nullopt) {
    Json e{{"error", kind}, {"message", message}};
    if (extra) e["leaf"] = *extra;
    err << e.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics for factorization of generalized theta functions", kToolName};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    Options o;

    auto* star = app.add_subcommand("verify-star", "Evaluate the polarization balance condition for a spec file");
    star->add_option("spec", o.spec_path, "Spec JSON file")->required();

    auto* dec = app.add_subcommand("decompose", "Build the genus-reduction decomposition tree");
    dec->add_option("spec", o.spec_path, "Spec JSON file")->required();
    dec->add_option("--depth", o.depth, "Maximum number of degenerations (default: genus)");
    dec->add_option("--oracle", o.oracle, "Leaf values: table.json or const:V");
    dec->add_flag("--inclusive", o.inclusive, "Let mu_1 range up to k instead of k-1");
    dec->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* br = app.add_subcommand("branch", "Rectangular GL(2r) -> GL(r) x GL(r) branching");
    br->add_option("--rank", o.rank, "r")->required();
    br->add_option("--power", o.power, "m")->required()->check(CLI::NonNegativeNumber);
    br->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* dims = app.add_subcommand("dims", "Dimension of a Schur module");
    dims->add_option("--partition", o.partition, "Partition as a JSON array, e.g. [2,1]")->required();
    dims->add_option("--vars", o.vars, "Dimension n of the underlying space")->required();

    auto* codim = app.add_subcommand("codim", "Codimension and dimension formulas");
    codim->require_subcommand(1, 1);
    auto* c_sch = codim->add_subcommand("schubert", "Codimension of a Schubert incidence locus");
    c_sch->add_option("--flag", o.flag, "Flag multiplicities as a JSON array")->required();
    c_sch->add_option("--r1", o.r1, "Dimension of the fixed subspace")->required();
    c_sch->add_option("--m", o.m_list, "Split of r1 as a JSON array")->required();
    for (const char* name : {"quot", "gps", "bounds"}) {
        auto* c = codim->add_subcommand(name, std::string("Codimension lower bounds (") + name + ")");
        c->add_option("--rank", o.rank, "r")->required();
        c->add_option("--genus", o.genus, "genus of the normalization")->required();
        c->add_option("--points", o.points, "number of parabolic points |I|")->required();
        c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    }
    auto* c_dd = codim->add_subcommand("doubledet", "Dimension of a double determinantal variety");
    c_dd->add_option("--a", o.a)->required();
    c_dd->add_option("--b", o.b)->required();
    c_dd->add_option("--p", o.p)->required();
    c_dd->add_option("--q", o.q)->required();
    c_dd->add_option("--rank", o.rank)->required();

    auto* ids = app.add_subcommand("identities", "Run the exhaustive identity sweep");
    ids->add_option("--max-rank", o.max_rank, "largest rank checked")->check(CLI::PositiveNumber);
    ids->add_option("--max-level", o.max_level, "largest level / power checked")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolName << ' ' << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage", e.what());
        return kValidationError;
    }

    const std::string hash = args_hash(args);
    try {
        if (star->parsed()) return cmd_verify_star(o, out);
        if (dec->parsed()) return cmd_decompose(o, out);
        if (br->parsed()) return cmd_branch(o, hash, out);
        if (dims->parsed()) return cmd_dims(o, hash, out);
        if (ids->parsed()) return cmd_identities(o, hash, out);
        for (auto* sub : codim->get_subcommands())
            if (sub->parsed()) return cmd_codim(sub->get_name(), o, hash, out);
    } catch (const LeafOracleError& e) {
        write_error(err, "oracle", e.what(), spec_to_json(e.leaf()));
        return kValidationError;
    } catch (const std::invalid_argument& e) {
        write_error(err, "validation", e.what());
        return kValidationError;
    } catch (const std::out_of_range& e) {
        write_error(err, "validation", e.what());
        return kValidationError;
    }
    write_error(err, "usage", "no subcommand given");
    return kValidationError;
}

}  // namespace theta::cli
