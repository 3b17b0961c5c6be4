// Command-line front end: parse a facet-list document, run the requested
// pipeline, print a deterministic report.  Exit code 0 means no validation
// or verification failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zk/document.hpp"
#include "zk/report.hpp"

namespace {

struct CommonArgs {
  std::string input;
  std::string format = "text";
  bool strict = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("input", args.input, "complex document (JSON facet list)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_flag("--strict", args.strict, "reject unknown document keys");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment-angle complex loop decomposition toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("zktool ") + zk::kToolVersion);

  CommonArgs homology_args;
  CLI::App* homology = app.add_subcommand(
      "homology", "homology of K, its clique subsets, and the moment-angle complex");
  add_common(homology, homology_args);

  CommonArgs classify_args;
  bool classify_assert = false;
  bool classify_embed = false;
  CLI::App* classify = app.add_subcommand("classify", "loop-space decomposition verdict");
  add_common(classify, classify_args);
  classify->add_flag("--i-assert-golod", classify_assert,
                     "honor the document's golod_assert subsets");
  classify->add_flag("--certificate", classify_embed,
                     "embed the full pushout certificate in the structured report");

  CommonArgs primes_args;
  bool primes_assert = false;
  CLI::App* primes = app.add_subcommand("primes", "excluded-prime report for localization");
  add_common(primes, primes_args);
  primes->add_flag("--i-assert-golod", primes_assert,
                   "honor the document's golod_assert subsets");

  CommonArgs loop_args;
  int max_degree = 8;
  std::vector<std::int64_t> fields;
  CLI::App* loop = app.add_subcommand("loop-factors",
                                      "Hilton-Milnor loop factor catalog and Poincare series");
  add_common(loop, loop_args);
  loop->add_option("--max-degree", max_degree, "catalog cutoff (homology degree)")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  loop->add_option("--field", fields, "also report the series mod this prime (repeatable)");

  CommonArgs cert_args;
  bool verify = false;
  std::string cert_in, cert_out;
  CLI::App* cert = app.add_subcommand("certificate", "pushout decomposition certificate");
  add_common(cert, cert_args);
  cert->add_flag("--verify", verify, "re-check every node with independent face arithmetic");
  cert->add_option("--cert", cert_in, "verify this certificate file instead of building one");
  cert->add_option("--emit", cert_out, "write the certificate as JSON to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    zk::Report report;
    bool structured = false;
    if (homology->parsed()) {
      zk::ReportOptions options;
      structured = homology_args.format == "structured";
      report = zk::cmd_homology(zk::document_from_file(homology_args.input, homology_args.strict),
                                options);
    } else if (classify->parsed()) {
      zk::ReportOptions options;
      options.assert_golod = classify_assert;
      options.embed_certificate = classify_embed;
      structured = classify_args.format == "structured";
      report = zk::cmd_classify(zk::document_from_file(classify_args.input, classify_args.strict),
                                options);
    } else if (primes->parsed()) {
      zk::ReportOptions options;
      options.assert_golod = primes_assert;
      structured = primes_args.format == "structured";
      report =
          zk::cmd_primes(zk::document_from_file(primes_args.input, primes_args.strict), options);
    } else if (loop->parsed()) {
      zk::ReportOptions options;
      options.max_degree = max_degree;
      options.fields = fields;
      for (auto p : fields) {
        if (!zk::is_prime_u64(static_cast<std::uint64_t>(p))) {
          throw zk::DocumentError("--field expects a prime, got " + std::to_string(p));
        }
      }
      structured = loop_args.format == "structured";
      report = zk::cmd_loop_factors(zk::document_from_file(loop_args.input, loop_args.strict),
                                    options);
    } else if (cert->parsed()) {
      zk::ReportOptions options;
      options.verify = verify;
      options.certificate_in = cert_in;
      options.certificate_out = cert_out;
      structured = cert_args.format == "structured";
      report = zk::cmd_certificate(zk::document_from_file(cert_args.input, cert_args.strict),
                                   options);
    }
    std::cout << report.rendered(structured);
    return report.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
