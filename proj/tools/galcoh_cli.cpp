#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "galcoh/json_io.hpp"
#include "galcoh/oracle.hpp"

namespace {

using namespace galcoh;

constexpr int kExitInvalid = 1;
constexpr int kExitCap = 2;

struct InputOpts {
  std::string catalog;
  std::string input;
};

void add_input_opts(CLI::App* cmd, InputOpts& in, bool allow_all = false) {
  auto* c = cmd->add_option("--catalog", in.catalog,
                            allow_all ? "Catalog entry name, or 'all'" : "Catalog entry name");
  auto* f = cmd->add_option("--input", in.input, "Descriptor JSON file, or '-' for stdin");
  c->excludes(f);
  f->excludes(c);
}

QuasiConnectedDescriptor load_descriptor(const InputOpts& in) {
  if (!in.catalog.empty()) return catalog_get(in.catalog);
  if (in.input.empty()) throw ValidationError("no input: pass --catalog or --input");
  std::string text;
  if (in.input == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(in.input);
    if (!f) throw ValidationError("cannot open " + in.input);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("input is not valid JSON");
  return descriptor_from_json(j);
}

void print_report_table(const H1Report& rep) {
  std::cout << "group:       " << rep.group << "\n"
            << "family:      " << rep.family << "\n"
            << "dim H1(Q):   " << rep.dim_h1_q << "\n"
            << "|W0|:        " << rep.w0_order << "\n"
            << "orbits:      " << rep.orbits.orbit_count() << "\n";
  for (const Orbit& o : rep.orbits.orbits)
    std::cout << "  rep " << (o.rep.empty() ? "()" : o.rep) << "  size " << o.size << "\n";
}

// Reports for a list of entries, assembled in input order regardless of the
// number of worker threads.
std::vector<Json> compute_many(const std::vector<std::string>& names, int threads) {
  std::vector<Json> out(names.size());
  if (threads < 1) threads = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < names.size(); i = next.fetch_add(1))
      out[i] = report_to_json(h1_compute(catalog_get(names[i])));
  };
  std::vector<std::future<void>> futures;
  for (int t = 1; t < threads; ++t)
    futures.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : futures) f.get();
  return out;
}

int cmd_compute(const InputOpts& in, const std::string& format, int threads, bool oracle) {
  if (in.catalog == "all") {
    std::vector<std::string> names = catalog_names();
    std::vector<Json> reports = compute_many(names, threads);
    if (format == "json") {
      Json arr = Json::array();
      for (Json& r : reports) arr.push_back(std::move(r));
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const Json& r : reports)
        std::cout << r.at("group").get<std::string>() << "  orbits "
                  << r.at("orbit_count").get<long>() << "\n";
    }
    return 0;
  }
  QuasiConnectedDescriptor desc = load_descriptor(in);
  H1Report rep = h1_compute(desc);
  if (oracle) {
    TwistedAction action = build_action(desc);
    auto engine = orbit_partition(action);
    auto brute = brute_orbits_full_group(action);
    if (engine != brute) {
      std::cerr << "oracle mismatch for " << desc.name << "\n";
      return kExitInvalid;
    }
  }
  if (format == "json")
    std::cout << report_to_json(rep).dump(2) << "\n";
  else
    print_report_table(rep);
  return 0;
}

int cmd_catalog(const std::string& filter, const std::string& format) {
  std::vector<std::string> names = catalog_names();
  if (!filter.empty()) {
    std::erase_if(names, [&](const std::string& n) { return n.rfind(filter, 0) != 0; });
  }
  if (format == "json") {
    Json arr = Json::array();
    for (const std::string& n : names) arr.push_back(n);
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const std::string& n : names) std::cout << n << "\n";
  }
  return 0;
}

int cmd_validate(const InputOpts& in, const std::string& format) {
  QuasiConnectedDescriptor desc = load_descriptor(in);
  std::vector<std::string> failed = descriptor_check_failures(desc);
  if (failed.empty()) {
    try {
      TwistedAction action = build_action(desc);
      validate_action(desc, action);
    } catch (const CapError&) {
      throw;
    } catch (const Error&) {
      failed.push_back("action-relations");
    }
  }
  bool valid = failed.empty();
  if (format == "json") {
    Json j;
    j["name"] = desc.name;
    j["valid"] = valid;
    j["failed"] = failed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << desc.name << ": " << (valid ? "valid" : "invalid") << "\n";
    for (const std::string& f : failed) std::cout << "  failed: " << f << "\n";
  }
  return valid ? 0 : kExitInvalid;
}

int cmd_torus(const InputOpts& in, const std::string& format) {
  QuasiConnectedDescriptor desc = load_descriptor(in);
  desc.M.validate();
  F2Space h1 = h1_gamma(desc.M);
  if (format == "json") {
    Json j;
    j["name"] = desc.name;
    j["dim_h1"] = h1.dimension();
    j["h1_order"] = 1L << h1.dimension();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << desc.name << ": dim H1 = " << h1.dimension() << ", |H1| = "
              << (1L << h1.dimension()) << "\n";
  }
  return 0;
}

int cmd_oracle_check(const InputOpts& in) {
  std::vector<QuasiConnectedDescriptor> descs;
  if (in.catalog == "all") {
    for (const std::string& name : catalog_names()) descs.push_back(catalog_get(name));
  } else {
    descs.push_back(load_descriptor(in));
  }
  bool all_ok = true;
  for (const QuasiConnectedDescriptor& desc : descs) {
    const std::string& name = desc.name;
    H1Report rep = h1_compute(desc);
    TwistedAction action = build_action(desc);
    std::string status = "ok";
    try {
      if (orbit_partition(action) != brute_orbits_full_group(action)) {
        status = "MISMATCH (full-group partition)";
        all_ok = false;
      }
    } catch (const CapError&) {
      status = "skipped (group too large)";
    }
    if (status == "ok" && compact_fast_applicable(desc) &&
        compact_fast_count(desc) != rep.orbits.orbit_count()) {
      status = "MISMATCH (compact fast path)";
      all_ok = false;
    }
    std::cout << name << ": " << status << "\n";
  }
  return all_ok ? 0 : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois cohomology of real quasi-connected reductive groups"};
  app.require_subcommand(1);

  InputOpts compute_in, validate_in, torus_in, oracle_in;
  std::string compute_fmt = "json", catalog_fmt = "table", validate_fmt = "table",
              torus_fmt = "table";
  std::string catalog_filter;
  int threads = 1;
  bool with_oracle = false;

  auto* compute = app.add_subcommand("compute", "Compute H1(R,G) orbits");
  add_input_opts(compute, compute_in, true);
  compute->add_option("--format", compute_fmt, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  compute->add_option("--threads", threads, "Worker threads for --catalog all")
      ->check(CLI::PositiveNumber);
  compute->add_flag("--oracle", with_oracle, "Cross-check against the brute-force oracle");

  auto* catalog = app.add_subcommand("catalog", "List built-in descriptors");
  catalog->add_option("--filter", catalog_filter, "Name prefix filter");
  catalog->add_option("--format", catalog_fmt, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* validate = app.add_subcommand("validate", "Run descriptor checks");
  add_input_opts(validate, validate_in);
  validate->add_option("--format", validate_fmt, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* torus = app.add_subcommand("torus", "H1(Gamma, M) of the quasi-torus module");
  add_input_opts(torus, torus_in);
  torus->add_option("--format", torus_fmt, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* oracle = app.add_subcommand("oracle-check", "Engine vs oracle comparison");
  add_input_opts(oracle, oracle_in, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(compute_in, compute_fmt, threads, with_oracle);
    if (catalog->parsed()) return cmd_catalog(catalog_filter, catalog_fmt);
    if (validate->parsed()) return cmd_validate(validate_in, validate_fmt);
    if (torus->parsed()) return cmd_torus(torus_in, torus_fmt);
    if (oracle->parsed()) return cmd_oracle_check(oracle_in);
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
