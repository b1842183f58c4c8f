#include "fishnet/report.hpp"

#include <sstream>

namespace fishnet {

namespace {

ordered_json bound_json(const CertBound& bound) {
    return ordered_json{{"value", bound.value},
                        {"justification", bound.justification},
                        {"trusted", bound.trusted}};
}

}  // namespace

ordered_json to_json(const QuotientCertificate& cert) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["input_digest"] = cert.input_digest;
    j["backend"] = cert.backend;
    j["target"] = cert.target;
    j["meridian_class"] = cert.meridian_class;
    j["maxima_labels"] = cert.maxima_labels;
    j["homomorphism_verified"] = cert.homomorphism_verified;
    j["image"] = cert.image;
    j["checks"] = cert.checks;
    j["lower_bound"] = bound_json(cert.lower_bound);
    j["upper_bound"] = bound_json(cert.upper_bound);
    j["concluded"] = cert.concluded;
    if (cert.concluded) {
        j["beta"] = cert.beta;
        j["mu"] = cert.mu;
    }
    if (cert.rank_claim) j["rank_claim"] = bound_json(*cert.rank_claim);
    return j;
}

std::string certificate_text(const QuotientCertificate& cert) {
    std::ostringstream out;
    out << "certificate\n";
    out << "  input digest : " << cert.input_digest << "\n";
    out << "  backend      : " << cert.backend << "\n";
    out << "  target       : " << cert.target << "\n";
    out << "  meridians    : " << cert.meridian_class << "\n";
    out << "  maxima       :";
    for (const auto& l : cert.maxima_labels) out << " " << l;
    out << "\n";
    out << "  homomorphism : " << (cert.homomorphism_verified ? "verified" : "NOT VERIFIED") << "\n";
    out << "  image        : " << cert.image << "\n";
    for (const auto& c : cert.checks) out << "  check        : " << c << "\n";
    out << "  lower bound  : " << cert.lower_bound.value << " ("
        << (cert.lower_bound.trusted ? "trusted lemma" : "machine-checked") << ": "
        << cert.lower_bound.justification << ")\n";
    out << "  upper bound  : " << cert.upper_bound.value << " (" << cert.upper_bound.justification
        << ")\n";
    if (cert.concluded)
        out << "  conclusion   : beta = mu = " << cert.beta << "\n";
    else
        out << "  conclusion   : bounds do not meet, no conclusion\n";
    if (cert.rank_claim)
        out << "  rank claim   : " << cert.rank_claim->value
            << " (trusted lemma: " << cert.rank_claim->justification << ")\n";
    return out.str();
}

ordered_json to_json(const DistanceReport& report) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["input_digest"] = report.digest;
    j["width"] = report.width;
    j["height"] = report.height;
    j["eligible"] = report.eligible;
    if (report.eligible) {
        j["distance"] = report.distance;
        j["ratio"] = report.ratio.display();
    }
    j["note"] = report.note;
    return j;
}

std::string distance_text(const DistanceReport& report) {
    std::ostringstream out;
    out << "distance report\n";
    out << "  input digest : " << report.digest << "\n";
    out << "  width/height : " << report.width << "/" << report.height << "\n";
    if (report.eligible) {
        out << "  distance     : " << report.distance << " (" << report.note << ")\n";
        out << "  ratio d/b    : " << report.ratio.display() << "\n";
    } else {
        out << "  distance     : " << report.note << "\n";
    }
    return out.str();
}

ordered_json spec_info_json(const FishnetSpec& spec) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["digest"] = spec_digest(spec);
    j["m"] = spec.width;
    j["n"] = spec.height;
    j["rows"] = spec.rows;
    j["classification"] = to_string(spec.classification());
    const ColumnGcds gcds = column_gcds(spec);
    ordered_json d = ordered_json::array();
    for (int col = 1; col <= spec.width - 1; ++col) {
        if (gcds.is_infinite(col))
            d.push_back(nullptr);
        else
            d.push_back(gcds.value(col));
    }
    j["column_gcds"] = d;
    j["components"] = component_count(spec);
    j["bridge_upper_bound"] = bridge_upper_bound(spec);
    const MrcHypothesis hyp = check_mrc_hypothesis(spec);
    switch (hyp.status) {
        case MrcHypothesis::Status::Pass: j["gcd_hypothesis"] = "pass"; break;
        case MrcHypothesis::Status::Fail: j["gcd_hypothesis"] = "fail"; break;
        case MrcHypothesis::Status::NotApplicableLoose:
            j["gcd_hypothesis"] = "not applicable (loose)";
            break;
    }
    if (!hyp.failing_columns.empty()) j["gcd_failing_columns"] = hyp.failing_columns;
    return j;
}

std::string spec_info_text(const FishnetSpec& spec) {
    std::ostringstream out;
    const ColumnGcds gcds = column_gcds(spec);
    out << "fishnet " << spec.width << "x" << spec.height << " [" << spec_digest(spec) << "]\n";
    out << "  classification : " << to_string(spec.classification()) << "\n";
    out << "  column gcds    : (";
    for (int col = 1; col <= spec.width - 1; ++col) {
        if (col > 1) out << ",";
        out << gcds.display(col);
    }
    out << ")\n";
    out << "  components     : " << component_count(spec) << "\n";
    out << "  bridges        : <= " << bridge_upper_bound(spec) << "\n";
    const MrcHypothesis hyp = check_mrc_hypothesis(spec);
    out << "  gcd hypothesis : ";
    switch (hyp.status) {
        case MrcHypothesis::Status::Pass: out << "PASS"; break;
        case MrcHypothesis::Status::Fail: {
            out << "FAIL (columns";
            for (int c : hyp.failing_columns) out << " " << c;
            out << ")";
            break;
        }
        case MrcHypothesis::Status::NotApplicableLoose: out << "not applicable (loose)"; break;
    }
    out << "\n";
    return out.str();
}

ordered_json to_json(const AugmentationResult& result) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["input_word"] = emit_plat(result.input);
    j["normalized_word"] = emit_plat(result.normalized);
    j["loose_fishnet"] = {{"m", result.loose_fishnet.width},
                          {"n", result.loose_fishnet.height},
                          {"rows", result.loose_fishnet.rows}};
    j["combined"] = {{"m", result.combined.width},
                     {"n", result.combined.height},
                     {"rows", result.combined.rows},
                     {"digest", spec_digest(result.combined)}};
    j["components"] = result.components;
    j["unknot_component_id"] = result.unknot_component_id;
    j["search_nodes"] = result.search_nodes;
    j["sign_patterns_tried"] = result.sign_patterns_tried;
    j["certificate"] = to_json(result.certificate);
    return j;
}

std::string augment_text(const AugmentationResult& result) {
    std::ostringstream out;
    out << "augmentation\n";
    out << "  input        : " << emit_plat(result.input);
    out << "  normalized   : " << emit_plat(result.normalized);
    out << "  combined     : width " << result.combined.width << ", height "
        << result.combined.height << " [" << spec_digest(result.combined) << "]\n";
    out << "  components   : " << result.components << " (unknot is component "
        << result.unknot_component_id << ")\n";
    out << "  search       : " << result.search_nodes << " nodes, "
        << result.sign_patterns_tried << " sign pattern(s)\n";
    out << certificate_text(result.certificate);
    return out.str();
}

}  // namespace fishnet
