#pragma once

// Report builders behind the command-line tool.  Every command takes a
// parsed document and options and produces both renderings: a stable text
// form and a structured JSON form.  Reports carry no timestamps or other
// run-varying state, so identical inputs give byte-identical output.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zk/classifier.hpp"
#include "zk/document.hpp"
#include "zk/homology.hpp"
#include "zk/localization.hpp"
#include "zk/loop_space.hpp"
#include "zk/splitting.hpp"

namespace zk {

inline constexpr const char* kToolVersion = "0.1.0";

// Above this vertex count the moment-angle homology sweep (2^m full
// subcomplexes) is skipped in reports and marked as such.
inline constexpr int kHomologySweepLimit = 14;

struct ReportOptions {
  bool structured = false;
  bool strict = false;
  int max_degree = 8;
  std::vector<std::int64_t> fields;  // requested F_p series
  bool verify = false;
  bool assert_golod = false;
  bool embed_certificate = false;  // classify: include the full tree
  std::string certificate_in;      // verify an external tree instead
  std::string certificate_out;     // write the built tree here
};

struct Report {
  bool ok = true;
  std::string text;
  nlohmann::ordered_json structured;

  std::string rendered(bool structured_format) const {
    return structured_format ? structured.dump(2) + "\n" : text;
  }
};

namespace report_detail {

using Json = nlohmann::ordered_json;

inline long long prime_power_value(const TorsionEntry& t) {
  long long v = 1;
  for (int i = 0; i < t.exponent; ++i) v *= t.prime;
  return v;
}

inline std::string group_to_text(const HomologyGroup& g) {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (g.betti == 1) append("Z");
  if (g.betti > 1) append("Z^" + std::to_string(g.betti));
  for (const auto& t : g.torsion) append("Z/" + std::to_string(prime_power_value(t)));
  return out.empty() ? "0" : out;
}

inline std::string profile_to_text(const HomologyProfile& p, const std::string& indent) {
  if (p.trivial()) return indent + "trivial\n";
  std::string out;
  for (const auto& [d, g] : p.groups()) {
    out += indent + "H~" + std::to_string(d) + " = " + group_to_text(g) + "\n";
  }
  return out;
}

inline Json profile_to_json(const HomologyProfile& p) {
  Json out = Json::array();
  for (const auto& [d, g] : p.groups()) {
    Json entry;
    entry["degree"] = d;
    entry["betti"] = g.betti;
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back({t.prime, t.exponent});
    entry["torsion"] = std::move(torsion);
    out.push_back(std::move(entry));
  }
  return out;
}

inline Json primes_to_json(const std::set<std::int64_t>& primes) {
  Json out = Json::array();
  for (auto p : primes) out.push_back(p);
  return out;
}

inline std::string primes_to_text(const std::set<std::int64_t>& primes) {
  if (primes.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (auto p : primes) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

inline std::string subset_text(VertexSubset s) { return s.to_string(); }

inline Json subset_json(VertexSubset s) {
  Json out = Json::array();
  for (int v : s.vertices()) out.push_back(v);
  return out;
}

inline std::string moore_text(const MooreAtom& m) {
  long long q = 1;
  for (int i = 0; i < m.exponent; ++i) q *= m.prime;
  return "P^" + std::to_string(m.degree) + "(" + std::to_string(q) + ")";
}

inline std::string word_text(const MooreWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.atoms.size(); ++i) {
    if (i > 0) out += "^";
    out += moore_text(w.atoms[i]);
  }
  return out;
}

inline std::string factor_text(const LoopFactor& f) {
  if (const auto* sphere = std::get_if<OmegaSphere>(&f)) {
    return "Omega S^" + std::to_string(sphere->degree);
  }
  const auto& block = std::get<TorsionBlock>(f);
  std::string inner;
  for (const auto& [word, mult] : block.words) {
    if (!inner.empty()) inner += " v ";
    if (!mult.is_one()) inner += mult.to_string() + "x ";
    inner += word_text(word);
  }
  return "Omega( " + inner + " )";
}

inline Json factor_json(const LoopFactor& f) {
  Json out;
  if (const auto* sphere = std::get_if<OmegaSphere>(&f)) {
    out["kind"] = "omega-sphere";
    out["degree"] = sphere->degree;
    return out;
  }
  const auto& block = std::get<TorsionBlock>(f);
  out["kind"] = "torsion-block";
  out["prime"] = block.prime;
  Json words = Json::array();
  for (const auto& [word, mult] : block.words) {
    Json entry;
    Json atoms = Json::array();
    for (const auto& a : word.atoms) atoms.push_back({a.degree, a.prime, a.exponent});
    entry["smash"] = std::move(atoms);
    entry["multiplicity"] = mult.to_string();
    words.push_back(std::move(entry));
  }
  out["words"] = std::move(words);
  return out;
}

inline Json catalog_to_json(const LoopFactorCatalog& catalog) {
  Json out;
  out["cutoff"] = catalog.cutoff;
  Json factors = Json::array();
  for (const auto& [factor, mult] : catalog.factors) {
    Json entry = factor_json(factor);
    entry["multiplicity"] = mult.to_string();
    factors.push_back(std::move(entry));
  }
  out["factors"] = std::move(factors);
  return out;
}

inline std::string catalog_to_text(const LoopFactorCatalog& catalog, const std::string& indent) {
  if (catalog.factors.empty()) return indent + "empty catalog (contractible)\n";
  std::string out;
  for (const auto& [factor, mult] : catalog.factors) {
    out += indent + factor_text(factor) + " x " + mult.to_string() + "\n";
  }
  return out;
}

inline Json series_to_json(const PoincareSeries& s) {
  Json out;
  out["ring"] = s.ring.is_rational ? "Q" : "F" + std::to_string(s.ring.prime);
  out["cutoff"] = s.cutoff;
  Json coeff = Json::array();
  for (const auto& c : s.coefficients) coeff.push_back(c.to_string());
  out["coefficients"] = std::move(coeff);
  return out;
}

inline std::string series_to_text(const PoincareSeries& s) {
  std::string out = s.ring.is_rational ? "Q" : "F" + std::to_string(s.ring.prime);
  out += ": [";
  for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
    if (i > 0) out += ", ";
    out += s.coefficients[i].to_string();
  }
  return out + "]";
}

inline Report make_report(const ComplexDocument& doc, const std::string& command) {
  Report report;
  report.structured["tool"] = "zktool";
  report.structured["version"] = kToolVersion;
  report.structured["command"] = command;
  report.structured["input"] = Json{{"name", doc.name}, {"digest", document_digest(doc)}};
  report.text = std::string("zktool ") + kToolVersion + "\ncommand: " + command +
                "\ninput: " + (doc.name.empty() ? "(unnamed)" : doc.name) + " (digest " +
                document_digest(doc) + ")\n\n";
  return report;
}

inline void describe_complex(Report& report, const SimplicialComplex& K) {
  report.structured["complex"] =
      Json{{"vertices", K.vertex_count()},
           {"dimension", K.dimension()},
           {"facets", K.facets().size()}};
  report.text += "complex: " + std::to_string(K.vertex_count()) + " vertices, dimension " +
                 std::to_string(K.dimension()) + ", " + std::to_string(K.facets().size()) +
                 " facets\n";
}

inline Json exclusion_to_json(const PrimeExclusionReport& r) {
  Json out;
  out["max_deficit"] = r.max_deficit;
  out["threshold_primes"] = primes_to_json(r.threshold_primes);
  out["torsion_primes"] = primes_to_json(r.torsion_primes);
  out["excluded_primes"] = primes_to_json(r.excluded_primes());
  out["verdict_ok"] = r.verdict_ok;
  out["threshold_convention"] = "primes p with 2p <= max_deficit are excluded";
  Json members = Json::array();
  for (const auto& [bits, status] : r.golod) {
    members.push_back(Json{{"subset", subset_json(VertexSubset(bits))},
                           {"golod", to_string(status)}});
  }
  out["golod"] = std::move(members);
  return out;
}

inline std::string exclusion_to_text(const PrimeExclusionReport& r, const std::string& indent) {
  std::string out;
  out += indent + "max deficit M = " + std::to_string(r.max_deficit) + "\n";
  out += indent + "threshold primes (2p <= M): " + primes_to_text(r.threshold_primes) + "\n";
  out += indent + "torsion primes: " + primes_to_text(r.torsion_primes) + "\n";
  out += indent + "excluded primes: " + primes_to_text(r.excluded_primes()) + "\n";
  out += indent + std::string("golod gate: ") + (r.verdict_ok ? "all members pass" : "undecided members present") + "\n";
  int unknown = 0;
  for (const auto& [bits, status] : r.golod) {
    if (status == GolodStatus::Unknown) ++unknown;
  }
  if (unknown > 0) {
    out += indent + std::to_string(unknown) + " member(s) with undecided rational Golodness\n";
  }
  return out;
}

}  // namespace report_detail

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

inline Report cmd_homology(const ComplexDocument& doc, const ReportOptions& options) {
  using report_detail::Json;
  SimplicialComplex K = to_complex(doc);
  Report report = report_detail::make_report(doc, "homology");
  report_detail::describe_complex(report, K);

  HomologyProfile base = reduced_homology(K);
  report.structured["homology"] = report_detail::profile_to_json(base);
  report.text += "reduced homology of K:\n" + report_detail::profile_to_text(base, "  ");

  auto members = clique_subsets(K);
  Json member_json = Json::array();
  int trivial_members = 0;
  std::string nontrivial_text;
  for (VertexSubset I : members) {
    HomologyProfile profile = reduced_homology(full_subcomplex(K, I).complex);
    if (profile.trivial()) {
      ++trivial_members;
    } else {
      nontrivial_text += "  " + report_detail::subset_text(I) + ":\n" +
                         report_detail::profile_to_text(profile, "    ");
    }
    member_json.push_back(Json{{"subset", report_detail::subset_json(I)},
                               {"homology", report_detail::profile_to_json(profile)}});
  }
  report.structured["clique_subsets"] = std::move(member_json);
  report.text += "clique subsets: " + std::to_string(members.size()) + " members, " +
                 std::to_string(trivial_members) + " with trivial reduced homology\n" +
                 nontrivial_text;

  if (K.vertex_count() <= kHomologySweepLimit) {
    HomologyProfile zk = moment_angle_homology(K);
    report.structured["moment_angle"] = report_detail::profile_to_json(zk);
    report.text += "moment-angle complex homology:\n" + report_detail::profile_to_text(zk, "  ");
  } else {
    report.structured["moment_angle"] = "skipped: vertex count exceeds the sweep limit";
    report.text += "moment-angle complex homology: skipped (vertex count " +
                   std::to_string(K.vertex_count()) + " exceeds the 2^m sweep limit " +
                   std::to_string(kHomologySweepLimit) + ")\n";
  }
  return report;
}

// ---------------------------------------------------------------------------
// certificates as JSON
// ---------------------------------------------------------------------------

namespace report_detail {

inline const char* leaf_rule_name(LeafRule rule) {
  switch (rule) {
    case LeafRule::CompleteOneSkeleton: return "complete-1-skeleton";
    case LeafRule::Simplex: return "simplex";
    case LeafRule::SingleVertex: return "single-vertex";
    default: return "none";
  }
}

inline LeafRule leaf_rule_from(const std::string& name) {
  if (name == "complete-1-skeleton") return LeafRule::CompleteOneSkeleton;
  if (name == "simplex") return LeafRule::Simplex;
  if (name == "single-vertex") return LeafRule::SingleVertex;
  if (name == "none") return LeafRule::None;
  throw DocumentError("unknown leaf rule '" + name + "'");
}

}  // namespace report_detail

inline nlohmann::ordered_json certificate_to_json(const DecompositionCertificate& cert) {
  using report_detail::Json;
  Json nodes = Json::array();
  for (const auto& node : cert.nodes) {
    Json entry;
    entry["labels"] = node.labels;
    Json facets = Json::array();
    for (VertexSubset f : node.complex.facets()) {
      facets.push_back(report_detail::subset_json(f));
    }
    entry["facets"] = std::move(facets);
    entry["vertex"] = node.vertex;
    entry["link"] = node.link;
    entry["star"] = node.star;
    entry["deletion"] = node.deletion;
    entry["rule"] = report_detail::leaf_rule_name(node.rule);
    nodes.push_back(std::move(entry));
  }
  return Json{{"certificate", std::move(nodes)}};
}

inline DecompositionCertificate certificate_from_json(const nlohmann::ordered_json& json) {
  if (!json.is_object() || !json.contains("certificate") || !json["certificate"].is_array()) {
    throw DocumentError("certificate file must hold a 'certificate' node array");
  }
  DecompositionCertificate cert;
  for (const auto& entry : json["certificate"]) {
    if (!entry.is_object()) throw DocumentError("certificate node must be an object");
    std::vector<int> labels = entry.at("labels").get<std::vector<int>>();
    std::vector<VertexSubset> facets;
    for (const auto& f : entry.at("facets")) {
      VertexSubset s;
      for (int v : f.get<std::vector<int>>()) {
        if (v < 1 || v > static_cast<int>(labels.size())) {
          throw DocumentError("certificate facet index out of node range");
        }
        s.add(v);
      }
      facets.push_back(s);
    }
    CertificateNode node{labels, SimplicialComplex(static_cast<int>(labels.size()), facets)};
    node.vertex = entry.at("vertex").get<int>();
    node.link = entry.at("link").get<int>();
    node.star = entry.at("star").get<int>();
    node.deletion = entry.at("deletion").get<int>();
    node.rule = report_detail::leaf_rule_from(entry.at("rule").get<std::string>());
    cert.nodes.push_back(std::move(node));
  }
  if (cert.nodes.empty()) throw DocumentError("certificate has no nodes");
  return cert;
}

inline Report cmd_classify(const ComplexDocument& doc, const ReportOptions& options) {
  using report_detail::Json;
  SimplicialComplex K = to_complex(doc);
  Report report = report_detail::make_report(doc, "classify");
  report_detail::describe_complex(report, K);

  auto assertions = options.assert_golod ? golod_subsets(doc) : std::vector<VertexSubset>{};
  Verdict verdict = classify(K, assertions);

  report.structured["verdict"] = to_string(verdict.kind);
  Json fired = Json::array();
  for (auto k : verdict.fired) fired.push_back(to_string(k));
  report.structured["fired_rules"] = std::move(fired);
  report.structured["golod_assertions_used"] = options.assert_golod;
  Json reasons = Json::array();
  for (const auto& r : verdict.reasons) {
    reasons.push_back(Json{{"subset", report_detail::subset_json(r.subset)},
                           {"rule", r.rule},
                           {"detail", r.detail}});
  }
  report.structured["reasons"] = std::move(reasons);

  report.text += "verdict: " + std::string(to_string(verdict.kind)) + "\n";
  if (!verdict.fired.empty()) {
    report.text += "fired rules:";
    for (auto k : verdict.fired) report.text += std::string(" ") + to_string(k);
    report.text += "\n";
  }
  for (const auto& r : verdict.reasons) {
    report.text += "  " + report_detail::subset_text(r.subset) + " [" + r.rule + "] " +
                   r.detail + "\n";
  }
  if (verdict.exclusion) {
    report.structured["prime_exclusion"] = report_detail::exclusion_to_json(*verdict.exclusion);
    report.text += "prime exclusion:\n" +
                   report_detail::exclusion_to_text(*verdict.exclusion, "  ");
  }

  DecompositionCertificate cert = certificate_build(K);
  CertificateCheck check = certificate_verify(cert);
  int leaves = 0;
  for (const auto& n : cert.nodes) leaves += n.is_leaf() && n.rule != LeafRule::None ? 1 : 0;
  report.structured["certificate"] = Json{{"nodes", cert.nodes.size()},
                                          {"leaves", leaves},
                                          {"verified", check.valid}};
  report.text += "certificate: " + std::to_string(cert.nodes.size()) + " nodes, " +
                 std::to_string(leaves) + " leaves, verified " +
                 (check.valid ? "true" : "false") + "\n";
  if (options.embed_certificate) {
    report.structured["certificate"]["tree"] = certificate_to_json(cert)["certificate"];
  }
  report.ok = check.valid;
  return report;
}

inline Report cmd_primes(const ComplexDocument& doc, const ReportOptions& options) {
  using report_detail::Json;
  SimplicialComplex K = to_complex(doc);
  Report report = report_detail::make_report(doc, "primes");
  report_detail::describe_complex(report, K);

  auto assertions = options.assert_golod ? golod_subsets(doc) : std::vector<VertexSubset>{};
  PrimeExclusionReport exclusion = prime_exclusion(K, assertions);
  report.structured["prime_exclusion"] = report_detail::exclusion_to_json(exclusion);
  report.structured["golod_assertions_used"] = options.assert_golod;
  report.text += report_detail::exclusion_to_text(exclusion, "");
  if (!doc.golod_assert.empty() && !options.assert_golod) {
    report.structured["note"] =
        "document carries golod_assert subsets; pass --i-assert-golod to honor them";
    report.text += "note: document carries golod_assert subsets; pass --i-assert-golod to honor them\n";
  }

  auto mnf = minimal_non_faces(K);
  report.structured["rationally_elliptic"] = mnf.rationally_elliptic;
  report.text += std::string("rationally elliptic moment-angle complex: ") +
                 (mnf.rationally_elliptic ? "yes" : "no") +
                 " (minimal missing faces " +
                 (mnf.rationally_elliptic ? "mutually disjoint" : "overlap") + ")\n";
  if (exclusion.verdict_ok) {
    const char* note =
        "away from the excluded primes the loop space is a product of spheres and loops on "
        "spheres; in particular the Steenrod action there is trivial (reported, not computed)";
    report.structured["localization_note"] = note;
    report.text += std::string("note: ") + note + "\n";
  }
  return report;
}

inline Report cmd_loop_factors(const ComplexDocument& doc, const ReportOptions& options) {
  using report_detail::Json;
  SimplicialComplex K = to_complex(doc);
  Report report = report_detail::make_report(doc, "loop-factors");
  report_detail::describe_complex(report, K);

  LoopCatalogResult result = loop_catalog(K, options.max_degree);
  report.structured["max_degree"] = options.max_degree;

  auto render_series = [&](const LoopFactorCatalog& catalog, Json& target, std::string& text,
                           const std::string& indent) {
    Json series = Json::array();
    auto add = [&](CoefficientRing ring) {
      try {
        PoincareSeries s = poincare_series(catalog, ring, options.max_degree);
        series.push_back(report_detail::series_to_json(s));
        text += indent + "series " + report_detail::series_to_text(s) + "\n";
      } catch (const MixedPrimeError& e) {
        series.push_back(Json{{"ring", ring.is_rational ? "Q" : "F" + std::to_string(ring.prime)},
                              {"error", e.what()}});
        text += indent + "series error: " + e.what() + "\n";
      }
    };
    add(CoefficientRing::rationals());
    for (auto p : options.fields) add(CoefficientRing::mod(p));
    target = std::move(series);
  };

  if (result.global) {
    Json atoms = Json::array();
    std::string atom_text;
    for (const auto& atom : result.global_atoms) {
      if (const auto* s = std::get_if<SphereAtom>(&atom)) {
        atoms.push_back(Json{{"kind", "sphere"}, {"degree", s->degree}});
        atom_text += atom_text.empty() ? "" : ", ";
        atom_text += "S^" + std::to_string(s->degree);
      } else {
        const auto& m = std::get<MooreAtom>(atom);
        atoms.push_back(
            Json{{"kind", "moore"}, {"degree", m.degree}, {"prime", m.prime}, {"exponent", m.exponent}});
        atom_text += atom_text.empty() ? "" : ", ";
        atom_text += report_detail::moore_text(m);
      }
    }
    report.structured["wedge_atoms"] = std::move(atoms);
    report.structured["catalog"] = report_detail::catalog_to_json(*result.global);
    report.text += "wedge atoms: " + (atom_text.empty() ? "(none)" : atom_text) + "\n";
    report.text += "loop factors of the moment-angle complex:\n" +
                   report_detail::catalog_to_text(*result.global, "  ");
    Json series;
    render_series(*result.global, series, report.text, "");
    report.structured["series"] = std::move(series);
    return report;
  }

  report.structured["catalog"] = nullptr;
  report.text += "no global wedge splitting; reporting per clique subset\n";
  Json members = Json::array();
  for (const auto& member : result.members) {
    Json entry;
    entry["subset"] = report_detail::subset_json(member.subset);
    entry["contractible"] = member.contractible;
    entry["resolved"] = member.resolved;
    report.text += report_detail::subset_text(member.subset) + ": ";
    if (!member.resolved) {
      entry["catalog"] = nullptr;
      report.text += "unresolved (no wedge conversion)\n";
    } else if (member.contractible) {
      entry["catalog"] = report_detail::catalog_to_json(*member.catalog);
      report.text += "contractible\n";
    } else {
      entry["catalog"] = report_detail::catalog_to_json(*member.catalog);
      report.text += "\n" + report_detail::catalog_to_text(*member.catalog, "  ");
      Json series;
      render_series(*member.catalog, series, report.text, "  ");
      entry["series"] = std::move(series);
    }
    members.push_back(std::move(entry));
  }
  report.structured["members"] = std::move(members);
  return report;
}

inline Report cmd_certificate(const ComplexDocument& doc, const ReportOptions& options) {
  using report_detail::Json;
  SimplicialComplex K = to_complex(doc);
  Report report = report_detail::make_report(doc, "certificate");
  report_detail::describe_complex(report, K);

  DecompositionCertificate cert;
  bool external = !options.certificate_in.empty();
  if (external) {
    std::ifstream in(options.certificate_in);
    if (!in) throw DocumentError("cannot open " + options.certificate_in);
    Json json;
    try {
      json = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw DocumentError(std::string("certificate is not valid JSON: ") + e.what());
    }
    cert = certificate_from_json(json);
    report.structured["certificate_source"] = options.certificate_in;
    report.text += "certificate loaded from " + options.certificate_in + "\n";
  } else {
    cert = certificate_build(K);
  }

  int leaves = 0;
  for (const auto& n : cert.nodes) leaves += n.is_leaf() && n.rule != LeafRule::None ? 1 : 0;
  report.structured["nodes"] = cert.nodes.size();
  report.structured["leaves"] = leaves;
  report.text += "certificate: " + std::to_string(cert.nodes.size()) + " nodes, " +
                 std::to_string(leaves) + " leaves\n";
  for (std::size_t i = 0; i < cert.nodes.size(); ++i) {
    const auto& n = cert.nodes[i];
    report.text += "  node " + std::to_string(i) + ": vertices {";
    for (std::size_t j = 0; j < n.labels.size(); ++j) {
      report.text += (j ? "," : "") + std::to_string(n.labels[j]);
    }
    report.text += "}";
    if (n.is_leaf()) {
      report.text += std::string(", ") +
                     (n.rule == LeafRule::None ? "link" : report_detail::leaf_rule_name(n.rule));
    } else {
      report.text += ", split at " + std::to_string(n.vertex) + " -> link " +
                     std::to_string(n.link) + ", star " + std::to_string(n.star) +
                     ", deletion " + std::to_string(n.deletion);
    }
    report.text += "\n";
  }

  if (options.verify || external) {
    CertificateCheck check = certificate_verify(cert);
    bool root_matches = true;
    if (external) {
      // the tree must be about this document's complex
      DecompositionCertificate fresh = certificate_build(K);
      root_matches = !cert.nodes.empty() &&
                     cert.nodes[0].labels == fresh.nodes[0].labels &&
                     cert.nodes[0].complex.facets() == fresh.nodes[0].complex.facets();
      if (!root_matches) check.diagnostics.push_back("node 0: RootComplexMismatch");
    }
    bool valid = check.valid && root_matches;
    report.structured["verified"] = valid;
    Json diagnostics = Json::array();
    for (const auto& d : check.diagnostics) diagnostics.push_back(d);
    report.structured["diagnostics"] = std::move(diagnostics);
    report.text += std::string("verified: ") + (valid ? "true" : "false") + "\n";
    for (const auto& d : check.diagnostics) report.text += "  " + d + "\n";
    report.ok = valid;
  }

  if (!options.certificate_out.empty()) {
    std::ofstream out(options.certificate_out);
    if (!out) throw DocumentError("cannot write " + options.certificate_out);
    out << certificate_to_json(cert).dump(2) << "\n";
    report.text += "certificate written to " + options.certificate_out + "\n";
  }
  return report;
}

}  // namespace zk
