#include "fishnet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "fishnet/report.hpp"

namespace fishnet {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct CliError : std::runtime_error {
    CliError(std::string msg, int code) : std::runtime_error(std::move(msg)), code(code) {}
    int code;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot open '" + path + "'", kInputError);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError("cannot write '" + path + "'", kInputError);
    out << content;
}

FishnetSpec load_fishnet(const std::string& path) {
    const std::string text = read_file(path);
    const size_t first = text.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && text[first] == '{') {
            const auto j = nlohmann::json::parse(text);
            FishnetSpec spec(j.at("m").get<int>(),
                             j.at("rows").get<std::vector<std::vector<std::int64_t>>>());
            if (j.contains("n") && j.at("n").get<int>() != spec.height)
                throw std::invalid_argument("field n does not match the row count");
            return spec;
        }
        return parse_fishnet(text);
    } catch (const ParseError& e) {
        throw CliError(path + ": line " + std::to_string(e.position()) + ": " + e.what(),
                       kInputError);
    } catch (const std::exception& e) {
        throw CliError(path + ": " + e.what(), kInputError);
    }
}

BraidWord load_plat(const std::string& path) {
    try {
        return parse_plat(read_file(path));
    } catch (const ParseError& e) {
        throw CliError(path + ": token " + std::to_string(e.position()) + ": " + e.what(),
                       kInputError);
    } catch (const std::exception& e) {
        throw CliError(path + ": " + e.what(), kInputError);
    }
}

struct FileOutcome {
    int code = kOk;
    std::string text;
    ordered_json json;
    std::vector<std::string> warnings;
    std::vector<std::string> disclosures;  // trusted-lemma citations in play
};

void collect_certificate(FileOutcome& o, const QuotientCertificate& cert) {
    if (cert.lower_bound.trusted)
        o.disclosures.push_back("lower bound " + std::to_string(cert.lower_bound.value) + ": " +
                                cert.lower_bound.justification);
    if (cert.upper_bound.trusted)
        o.disclosures.push_back("upper bound " + std::to_string(cert.upper_bound.value) + ": " +
                                cert.upper_bound.justification);
    if (cert.rank_claim)
        o.disclosures.push_back("rank claim " + std::to_string(cert.rank_claim->value) + ": " +
                                cert.rank_claim->justification);
}

int worst(const std::vector<FileOutcome>& outcomes) {
    int code = kOk;
    for (const auto& o : outcomes) {
        if (o.code == kInputError) return kInputError;
        if (o.code == kBudget) code = kBudget;
        if (o.code == kCheckFailed && code == kOk) code = kCheckFailed;
    }
    return code;
}

std::vector<FileOutcome> map_files(const std::vector<std::string>& files, bool parallel,
                                   const std::function<FileOutcome(const std::string&)>& fn) {
    std::vector<FileOutcome> outcomes(files.size());
    auto guarded = [&](const std::string& path) -> FileOutcome {
        try {
            return fn(path);
        } catch (const CliError& e) {
            FileOutcome o;
            o.code = e.code;
            o.text = std::string(e.what()) + "\n";
            o.json = ordered_json{{"error", e.what()}};
            return o;
        } catch (const std::exception& e) {
            FileOutcome o;
            o.code = kInputError;
            o.text = std::string(e.what()) + "\n";
            o.json = ordered_json{{"error", e.what()}};
            return o;
        }
    };
    if (parallel && files.size() > 1) {
        std::vector<std::future<FileOutcome>> futures;
        futures.reserve(files.size());
        for (const auto& f : files)
            futures.push_back(std::async(std::launch::async, guarded, f));
        for (size_t i = 0; i < files.size(); ++i) outcomes[i] = futures[i].get();
    } else {
        for (size_t i = 0; i < files.size(); ++i) outcomes[i] = guarded(files[i]);
    }
    return outcomes;
}

int emit(std::ostream& out, const std::string& command, bool json,
         const std::vector<FileOutcome>& outcomes) {
    std::vector<std::string> warnings, disclosures;
    for (const auto& o : outcomes) {
        warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
        disclosures.insert(disclosures.end(), o.disclosures.begin(), o.disclosures.end());
    }
    if (json) {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = command;
        doc["results"] = ordered_json::array();
        for (const auto& o : outcomes) doc["results"].push_back(o.json);
        doc["warnings"] = warnings;
        doc["trusted_lemma_disclosures"] = disclosures;
        doc["exit_status"] = worst(outcomes);
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& o : outcomes) out << o.text;
        for (const auto& w : warnings) out << "warning: " << w << "\n";
        for (const auto& d : disclosures) out << "trusted-lemma disclosure: " << d << "\n";
    }
    return worst(outcomes);
}

DeltaSet parse_delta_list(const std::string& text) {
    std::vector<std::int64_t> deltas;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        deltas.push_back(std::stoll(item));
    return DeltaSet(std::move(deltas));
}

struct BackendChoice {
    enum class Kind { Symbolic, Symmetric, Dihedral } kind = Kind::Symbolic;
    int parameter = 0;  // N or q
};

BackendChoice parse_backend(const std::string& text) {
    BackendChoice choice;
    if (text == "symbolic") return choice;
    const size_t colon = text.find(':');
    const std::string head = text.substr(0, colon);
    if (colon == std::string::npos)
        throw CliError("backend '" + text + "' needs a parameter, e.g. symmetric:4 or dihedral:3",
                       kInputError);
    choice.parameter = std::stoi(text.substr(colon + 1));
    if (head == "symmetric")
        choice.kind = BackendChoice::Kind::Symmetric;
    else if (head == "dihedral")
        choice.kind = BackendChoice::Kind::Dihedral;
    else
        throw CliError("unknown backend '" + head + "'", kInputError);
    return choice;
}

FileOutcome certify_one(const std::string& path, const BackendChoice& backend,
                        std::int64_t max_nodes, std::int64_t order_cap, bool require_spanning) {
    const FishnetSpec spec = load_fishnet(path);
    FileOutcome o;
    if (backend.kind == BackendChoice::Kind::Symbolic) {
        const Prop14Result result = prop14_certificate(spec);
        switch (result.status) {
            case Prop14Result::Status::Ok:
                o.text = certificate_text(result.certificate);
                o.json = to_json(result.certificate);
                collect_certificate(o, result.certificate);
                break;
            case Prop14Result::Status::NotRegular:
                o.code = kCheckFailed;
                o.text = "gcd hypothesis not applicable: spec is loose\n";
                o.json = {{"error", "loose spec"}};
                break;
            case Prop14Result::Status::HypothesisFailed: {
                std::string cols;
                for (int c : result.hypothesis.failing_columns)
                    cols += (cols.empty() ? "" : " ") + std::to_string(c);
                o.code = kCheckFailed;
                o.text = "gcd hypothesis FAILED at even column(s) " + cols + "\n";
                o.json = {{"error", "gcd hypothesis failed"},
                          {"failing_columns", result.hypothesis.failing_columns}};
                break;
            }
            case Prop14Result::Status::ColoringFailed:
                o.code = kCheckFailed;
                o.text = "symbolic propagation failed: " + result.outcome.failure.message + "\n";
                o.json = {{"error", result.outcome.failure.message}};
                break;
        }
        return o;
    }

    const InvolutionClass cls = backend.kind == BackendChoice::Kind::Symmetric
                                    ? transposition_class(backend.parameter)
                                    : dihedral_reflection_class(backend.parameter);
    FindOptions opt;
    opt.max_nodes = max_nodes;
    opt.require_spanning = require_spanning;
    const FindResult find = find_coloring(spec, cls, opt);
    if (find.status == SearchStatus::BudgetExceeded) {
        o.code = kBudget;
        o.text = "coloring search budget exceeded after " + std::to_string(find.nodes) + " nodes\n";
        o.json = {{"error", "budget exceeded"}, {"nodes", find.nodes}};
        return o;
    }
    if (find.status == SearchStatus::Exhausted) {
        o.code = kCheckFailed;
        o.text = "coloring search exhausted: no coloring onto " + cls.name + " (" +
                 std::to_string(find.nodes) + " nodes)\n";
        o.json = {{"error", "no coloring found"}, {"nodes", find.nodes}};
        return o;
    }
    const QuotientCertificate cert = concrete_certificate(spec, find.coloring, cls, order_cap);
    o.text = certificate_text(cert);
    o.json = to_json(cert);
    collect_certificate(o, cert);
    if (cert.image.find("cap exceeded") != std::string::npos)
        o.warnings.push_back("group enumeration cap exceeded; image not fully identified");
    return o;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fishnet: plat diagrams, coloring certificates, and bridge arithmetic"};
    app.require_subcommand(1);
    bool json = false;
    bool parallel = false;
    app.add_flag("--json", json, "emit machine-readable reports");
    app.add_flag("--parallel", parallel, "process multiple input files concurrently");

    std::vector<std::string> files;
    std::string backend_text = "symbolic";
    std::int64_t max_nodes = 100'000'000;
    std::int64_t order_cap = permgroup::kDefaultOrderCap;
    bool require_spanning = false;
    std::int64_t delta_value = 3;
    std::string out_path;
    int bridges = 0;
    std::string ratio_text = "0";
    int width = 0;
    std::string delta_list;
    int count = 0;

    auto* cmd_info = app.add_subcommand("info", "classification, gcds, components, bounds");
    cmd_info->add_option("files", files)->required()->expected(-1);

    auto* cmd_certify = app.add_subcommand("certify", "coloring certificate for a fishnet file");
    cmd_certify->add_option("files", files)->required()->expected(-1);
    cmd_certify->add_option("--backend", backend_text,
                            "symbolic | symmetric:N | dihedral:q (default symbolic)");
    cmd_certify->add_option("--max-nodes", max_nodes, "search node budget");
    cmd_certify->add_option("--group-order-cap", order_cap, "group enumeration cap");
    cmd_certify->add_flag("--require-spanning", require_spanning,
                          "accept only colorings with full symmetric image");

    auto* cmd_augment = app.add_subcommand("augment", "add the unknot that pins beta = mu = 2b-1");
    cmd_augment->add_option("files", files)->required()->expected(1);
    cmd_augment->add_option("--delta", delta_value, "odd crossing parameter >= 3 (default 3)");
    cmd_augment->add_option("--max-nodes", max_nodes, "search node budget");
    cmd_augment->add_option("--out", out_path, "write the combined fishnet file here");

    auto* cmd_distance = app.add_subcommand("distance", "induced bridge-sphere distance");
    cmd_distance->add_option("files", files)->required()->expected(-1);

    auto* cmd_build = app.add_subcommand("build-knot", "knot with distance/bridge ratio > r");
    cmd_build->add_option("--bridges", bridges, "bridge number b >= 3")->required();
    cmd_build->add_option("--ratio", ratio_text, "rational bound p/q")->required();
    cmd_build->add_option("--out", out_path, "write the fishnet file here");

    auto* cmd_components = app.add_subcommand("components", "strong spec with k components");
    cmd_components->add_option("--width", width, "even width m >= 4")->required();
    cmd_components->add_option("--delta", delta_list, "comma list delta_2,delta_4,...")->required();
    cmd_components->add_option("--count", count, "component count 1..m/2")->required();
    cmd_components->add_option("--out", out_path, "write the fishnet file here");

    auto* cmd_compose = app.add_subcommand("compose", "stack <upper> above <lower>");
    cmd_compose->add_option("files", files)->required()->expected(2);
    cmd_compose->add_option("--out", out_path, "write the composed fishnet file here");

    std::reverse(args.begin(), args.end());  // CLI11's vector parse is reversed
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    try {
        if (cmd_info->parsed()) {
            auto outcomes = map_files(files, parallel, [&](const std::string& path) {
                const FishnetSpec spec = load_fishnet(path);
                FileOutcome o;
                o.text = spec_info_text(spec);
                o.json = spec_info_json(spec);
                return o;
            });
            return emit(out, "info", json, outcomes);
        }

        if (cmd_certify->parsed()) {
            const BackendChoice backend = parse_backend(backend_text);
            auto outcomes = map_files(files, parallel, [&](const std::string& path) {
                return certify_one(path, backend, max_nodes, order_cap, require_spanning);
            });
            return emit(out, "certify", json, outcomes);
        }

        if (cmd_augment->parsed()) {
            const BraidWord word = load_plat(files[0]);
            AugmentOptions opt;
            opt.delta = delta_value;
            opt.max_nodes = max_nodes;
            try {
                const AugmentationResult result = augment(word, opt);
                if (!out_path.empty()) write_file(out_path, emit_fishnet(result.combined));
                FileOutcome o;
                o.text = augment_text(result);
                o.json = to_json(result);
                collect_certificate(o, result.certificate);
                if (result.sign_patterns_tried > 1)
                    o.warnings.push_back("fallback sweep used " +
                                         std::to_string(result.sign_patterns_tried) +
                                         " sign patterns");
                return emit(out, "augment", json, {o});
            } catch (const AugmentSearchError& e) {
                err << e.what() << "\n";
                return kBudget;
            } catch (const std::invalid_argument& e) {
                err << e.what() << "\n";
                return kInputError;
            }
        }

        if (cmd_distance->parsed()) {
            auto outcomes = map_files(files, parallel, [&](const std::string& path) {
                const DistanceReport report = jm_distance(load_fishnet(path));
                FileOutcome o;
                o.text = distance_text(report);
                o.json = to_json(report);
                return o;
            });
            return emit(out, "distance", json, outcomes);
        }

        if (cmd_build->parsed()) {
            Rational bound = Rational::parse(ratio_text);
            const HighRatioResult result = build_high_ratio_knot(bridges, bound);
            if (!out_path.empty()) write_file(out_path, emit_fishnet(result.spec));
            FileOutcome o;
            o.text = spec_info_text(result.spec) + distance_text(result.report) +
                     certificate_text(result.certificate.certificate);
            o.json = ordered_json{{"spec", spec_info_json(result.spec)},
                                  {"target_height", result.target_height},
                                  {"distance", to_json(result.report)},
                                  {"certificate", to_json(result.certificate.certificate)}};
            collect_certificate(o, result.certificate.certificate);
            return emit(out, "build-knot", json, {o});
        }

        if (cmd_components->parsed()) {
            const DeltaSet delta = parse_delta_list(delta_list);
            const ComponentSearchResult result = build_with_component_count(width, delta, count);
            if (!result.found) {
                err << "search exhausted (frontier " << result.frontier_size << ")\n";
                return kBudget;
            }
            if (!out_path.empty()) write_file(out_path, emit_fishnet(result.spec));
            FileOutcome o;
            o.text = spec_info_text(result.spec);
            o.json = spec_info_json(result.spec);
            return emit(out, "components", json, {o});
        }

        if (cmd_compose->parsed()) {
            const FishnetSpec upper = load_fishnet(files[0]);
            const FishnetSpec lower = load_fishnet(files[1]);
            const FishnetSpec combined = compose(lower, upper);
            if (!out_path.empty()) write_file(out_path, emit_fishnet(combined));
            FileOutcome o;
            o.text = spec_info_text(combined);
            o.json = spec_info_json(combined);
            return emit(out, "compose", json, {o});
        }
    } catch (const CliError& e) {
        err << e.what() << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kCheckFailed;
    }
    err << "no command\n";
    return kInputError;
}

}  // namespace fishnet
