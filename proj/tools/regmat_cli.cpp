// Command-line front end for the binary matroid catalogue.
//
//   regmat generate --rank K --size N --class CLASS [--regular-only] [--tutte] [--out FILE] [--force]
//   regmat dual-listing --rank K --size N --class CLASS [--regular-only] [--tutte] [--canonicalize] [--out FILE]
//   regmat counts --max-rank K --max-size N --class CLASS [--regular-only]
//
// Exit codes: 0 success, 1 usage or I/O error, 2 invalid shape, 3 resource guard.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "regmat/catalogue.hpp"
#include "regmat/parallel.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalidShape = 2;
constexpr int kExitResourceGuard = 3;

const std::map<std::string, regmat::CatalogueClass> kClassNames = {
    {"loopless", regmat::CatalogueClass::kLoopless},
    {"simple", regmat::CatalogueClass::kSimple},
    {"connected-loopless", regmat::CatalogueClass::kConnectedLoopless},
    {"connected-simple", regmat::CatalogueClass::kConnectedSimple},
};

void emit(const std::vector<regmat::CatalogueEntry>& entries, const std::string& path) {
  if (path.empty()) {
    regmat::write_entries(std::cout, entries);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  regmat::write_entries(out, entries);
  if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalogue of small binary and regular matroids"};
  app.require_subcommand(1);
  const int threads = regmat::default_thread_count();

  regmat::GenerateRequest gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "list one representative per isomorphism class");
  generate->add_option("--rank", gen.rank, "rank k")->required();
  generate->add_option("--size", gen.size, "size n")->required();
  generate->add_option("--class", gen.cls, "matroid class")
      ->required()
      ->transform(CLI::CheckedTransformer(kClassNames, CLI::ignore_case));
  generate->add_flag("--regular-only", gen.regular_only, "keep regular matroids only");
  generate->add_flag("--tutte", gen.with_tutte, "attach Tutte polynomials");
  generate->add_option("--out", gen_out, "output file (default: stdout)");
  generate->add_flag("--force", gen.force, "allow sizes beyond 15 or ranks beyond 7");

  regmat::DualListingRequest dl;
  std::string dl_out;
  auto* dual_listing = app.add_subcommand("dual-listing", "list high-rank classes through duals of low-rank ones");
  dual_listing->add_option("--rank", dl.rank, "rank k")->required();
  dual_listing->add_option("--size", dl.size, "size n")->required();
  dual_listing->add_option("--class", dl.cls, "connected-loopless or connected-simple")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, regmat::CatalogueClass>{
              {"connected-loopless", regmat::CatalogueClass::kConnectedLoopless},
              {"connected-simple", regmat::CatalogueClass::kConnectedSimple}},
          CLI::ignore_case));
  dual_listing->add_flag("--regular-only", dl.regular_only, "keep regular matroids only");
  dual_listing->add_flag("--tutte", dl.with_tutte, "attach Tutte polynomials");
  dual_listing->add_flag("--canonicalize", dl.canonicalize, "replace each entry by its standard representative");
  dual_listing->add_option("--out", dl_out, "output file (default: stdout)");
  dual_listing->add_flag("--force", dl.force, "allow shapes beyond the default limits");

  int max_rank = 0;
  int max_size = 0;
  regmat::CatalogueClass count_cls = regmat::CatalogueClass::kLoopless;
  bool count_regular = false;
  bool count_force = false;
  auto* counts = app.add_subcommand("counts", "print a rank x size table of class counts");
  counts->add_option("--max-rank", max_rank, "largest rank")->required();
  counts->add_option("--max-size", max_size, "largest size")->required();
  counts->add_option("--class", count_cls, "matroid class")
      ->required()
      ->transform(CLI::CheckedTransformer(kClassNames, CLI::ignore_case));
  counts->add_flag("--regular-only", count_regular, "count regular matroids only");
  counts->add_flag("--force", count_force, "allow sizes beyond 15 or ranks beyond 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) {
      gen.threads = threads;
      emit(regmat::run_generate(gen), gen_out);
    } else if (*dual_listing) {
      dl.threads = threads;
      emit(regmat::run_dual_listing(dl), dl_out);
    } else if (*counts) {
      std::cout << "class=" << regmat::to_string(count_cls) << (count_regular ? " regular-only" : "") << '\n'
                << regmat::run_counts(max_rank, max_size, count_cls, count_regular, count_force, threads).to_text();
    }
  } catch (const regmat::InvalidShape& e) {
    std::cerr << "invalid shape: " << e.what() << '\n';
    return kExitInvalidShape;
  } catch (const regmat::ResourceGuard& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitResourceGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
