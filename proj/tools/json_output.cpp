#include "json_output.hpp"

#include <sstream>

namespace eisenspec::cli {

json to_json(const IntPolynomial& p) {
    json out = json::array();
    for (const mpz_class& c : p.coefficients()) {
        if (c.fits_slong_p()) out.push_back(c.get_si());
        else out.push_back(c.get_str());
    }
    return out;
}

json to_json(const Inertia& in) {
    return {{"positive", in.positive}, {"zero", in.zero}, {"negative", in.negative}};
}

json to_json(const SwitchingFunction& x) {
    json out = json::array();
    for (Unit u : x.x) out.push_back(u.exponent());
    return out;
}

json to_json(const SwitchingIsomorphism& w) {
    return {{"bijection", w.bijection}, {"switch", to_json(w.switching)}, {"conjugated", w.conjugated}};
}

json to_json(const ClassificationVerdict& v) {
    json out{{"family", to_string(v.family)}, {"parameters", v.parameters}, {"detail", v.detail}};
    if (v.representative) out["representative"] = to_sdg(*v.representative);
    if (v.witness) out["witness"] = to_json(*v.witness);
    return out;
}

json to_json(const CensusReport& r) {
    json classes = json::array();
    for (const CensusClass& c : r.classes) {
        json entry{{"representative", to_sdg(c.representative)}};
        if (c.canonical) entry["canonical_form"] = *c.canonical;
        classes.push_back(std::move(entry));
    }
    return {{"des_verdict", to_string(r.des_verdict)},
            {"class_count", r.classes.size()},
            {"classes", std::move(classes)},
            {"external_source", r.external_source},
            {"scanned",
             {{"graphs", r.scanned.graphs},
              {"graphs_scanned", r.scanned.graphs_scanned},
              {"signatures", r.scanned.signatures},
              {"pruned", r.scanned.pruned},
              {"matches", r.scanned.matches}}}};
}

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const auto& [u, v] : edges) out.push_back({u, v});
    return out;
}

namespace {

void render(std::ostringstream& os, const json& value, const std::string& prefix) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items()) render(os, child, prefix.empty() ? key : prefix + "." + key);
        return;
    }
    if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
        for (std::size_t i = 0; i < value.size(); ++i) render(os, value[i], prefix + "[" + std::to_string(i) + "]");
        return;
    }
    os << prefix << ": ";
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        if (s.find('\n') != std::string::npos) {
            os << "\n";
            std::istringstream lines(s);
            for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
            return;
        }
        os << s;
    } else {
        os << value.dump();
    }
    os << "\n";
}

}  // namespace

std::string render_pretty(const json& payload) {
    std::ostringstream os;
    render(os, payload, "");
    return os.str();
}

}  // namespace eisenspec::cli
