#include "bruhat/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "bruhat/errors.hpp"
#include "bruhat/geocoeff.hpp"
#include "bruhat/json_io.hpp"
#include "bruhat/orbitpoly.hpp"
#include "bruhat/rootsys.hpp"
#include "bruhat/version.hpp"
#include "bruhat/volume.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat::cli {

namespace {

namespace fs = std::filesystem;

struct SystemArgs {
  std::string family;
  int rank = 0;

  RootSystemId id() const {
    if (family.size() != 1) throw InvalidInput("--type must be one of A,B,C,D,E,F,G");
    RootSystemId id{static_cast<char>(std::toupper(static_cast<unsigned char>(family[0]))), rank};
    validate(id);
    return id;
  }
};

struct Budgets {
  std::size_t interval_cap = 1'000'000;
  std::size_t box_cap = kDefaultBoxCap;
};

void add_system(CLI::App* cmd, SystemArgs& s) {
  cmd->add_option("--type", s.family, "Root system family (A-G)")->required();
  cmd->add_option("--rank", s.rank, "Rank n")->required();
}

void add_budgets(CLI::App* cmd, Budgets& b) {
  cmd->add_option("--interval-cap", b.interval_cap, "Largest lower interval to enumerate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--box-cap", b.box_cap, "Largest box enumeration")->check(CLI::PositiveNumber);
}

Coweight parse_lambda(std::string text, int n) {
  std::erase_if(text, [](char c) { return c == ' ' || c == '(' || c == ')' || c == '[' || c == ']'; });
  Coweight out;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidInput("malformed lambda entry '" + item + "'");
    if (v < 0) throw InvalidInput("lambda coordinates must be non-negative");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("lambda needs " + std::to_string(n) + " coordinates");
  }
  return out;
}

NodeSet parse_subset(const std::string& text, int n) {
  NodeSet J = NodeSet::parse(text);
  if (!J.is_subset_of(NodeSet::full(n))) throw InvalidInput("J must be a subset of {1..n}");
  return J;
}

Json count_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string lambda_string(const Coweight& l) {
  std::string s;
  for (long x : l) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

std::optional<fs::path> cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv(kCacheEnv); env && *env) return fs::path(env);
  return std::nullopt;
}

fs::path cache_file(const fs::path& dir, const RootSystemId& id) {
  return dir / (id.to_string() + "-" + kVersion + ".json");
}

GeometricCoefficients read_coefficients(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read coefficient file " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("malformed coefficient file " + path.string());
  }
  return coefficients_from_json(j);
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream o(path);
  if (!o) throw InvalidInput("cannot write " + path.string());
  o << text;
}

// Coefficients from an explicit file, the cache, or a fresh fit (stored in the cache).
GeometricCoefficients load_coefficients(const RootSystemData& data, const std::string& coeffs,
                                        const std::string& cache_flag, const Budgets& b) {
  if (!coeffs.empty()) {
    GeometricCoefficients c = read_coefficients(coeffs);
    if (c.system != data.id) throw InvalidInput("coefficient file is for " + c.system.to_string());
    return c;
  }
  auto dir = cache_dir(cache_flag);
  if (dir) {
    fs::path f = cache_file(*dir, data.id);
    if (fs::exists(f)) return read_coefficients(f);
  }
  FitOptions opts;
  opts.box_cap = b.box_cap;
  GeometricCoefficients c = fit_mu(data, opts);
  if (dir) write_file(cache_file(*dir, data.id), dump(to_json(c)));
  return c;
}

Integer bruhat_count(const RootSystemData& data, const Coweight& lambda, const Budgets& b) {
  ElementWithWord t = theta(data, lambda);
  return lower_interval_size(data, t.element, t.word, b.interval_cap);
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}, {"schema", kSchema}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower Bruhat intervals in affine Weyl groups"};
  app.name(args.empty() ? "bruhat" : args[0]);
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  SystemArgs sys;
  Budgets budgets;
  std::string lambda_text, method = "lattice", coeffs_path, cache_flag, out_path, subset_text;
  bool no_timing = false, force = false, subset_given = false;
  long max_coord = 2, k = 0, d = 0;

  auto* count = app.add_subcommand("count", "Size of the lower interval below theta(lambda)");
  add_system(count, sys);
  add_budgets(count, budgets);
  count->add_option("--lambda", lambda_text, "Coweight coordinates m1,...,mn")->required();
  count->add_option("--method", method, "bruhat, lattice or geometric")
      ->check(CLI::IsMember({"bruhat", "lattice", "geometric"}));
  count->add_option("--coeffs", coeffs_path, "Coefficient file for the geometric method");
  count->add_option("--cache-dir", cache_flag, "Coefficient cache directory");
  count->add_flag("--no-timing", no_timing, "Omit elapsed_ms for byte-stable output");

  auto* fit = app.add_subcommand("fit", "Fit the geometric coefficients");
  add_system(fit, sys);
  add_budgets(fit, budgets);
  fit->add_option("--out", out_path, "Output file (stdout if omitted)");
  fit->add_flag("--force", force, "Overwrite an existing output file");

  auto* verify = app.add_subcommand("verify", "Cross-check all counting methods");
  add_system(verify, sys);
  add_budgets(verify, budgets);
  verify->add_option("--max-coord", max_coord, "Largest coweight coordinate")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--cache-dir", cache_flag, "Coefficient cache directory");

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of a hypersimplex");
  ehrhart->add_option("--k", k, "Coordinate sum")->required();
  ehrhart->add_option("--d", d, "Ambient dimension")->required();

  auto* volumes = app.add_subcommand("volumes", "Relative volume polynomials of the faces F_J");
  add_system(volumes, sys);
  auto* j_opt = volumes->add_option("--J", subset_text, "Subset of nodes, e.g. 1,2 (empty for none)");

  auto* rootsys = app.add_subcommand("rootsys", "Dump root system data");
  add_system(rootsys, sys);

  auto* faces = app.add_subcommand("faces", "Vertices of the face F_J of the orbit polytope");
  add_system(faces, sys);
  faces->add_option("--lambda", lambda_text, "Coweight coordinates")->required();
  faces->add_option("--J", subset_text, "Subset of nodes")->required();

  auto* theta_cmd = app.add_subcommand("theta", "The element theta(lambda) with a reduced word");
  add_system(theta_cmd, sys);
  theta_cmd->add_option("--lambda", lambda_text, "Coweight coordinates")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("bruhat");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  subset_given = j_opt->count() > 0;

  try {
    if (count->parsed()) {
      RootSystemData data = build_root_system(sys.id());
      Coweight lambda = parse_lambda(lambda_text, data.n);
      auto start = std::chrono::steady_clock::now();
      Integer result;
      if (method == "bruhat") {
        result = bruhat_count(data, lambda, budgets);
      } else if (method == "lattice") {
        result = interval_size_lattice(data, lambda, budgets.box_cap);
      } else {
        GeometricCoefficients c = load_coefficients(data, coeffs_path, cache_flag, budgets);
        result = evaluate_formula(data, c, lambda);
      }
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      Json j{{"system", data.id.to_string()},
             {"lambda", lambda},
             {"method", method},
             {"count", count_json(result)},
             {"schema", kSchema}};
      if (!no_timing) j["elapsed_ms"] = ms.count();
      out << dump(j);
      return kOk;
    }

    if (fit->parsed()) {
      RootSystemData data = build_root_system(sys.id());
      if (!out_path.empty() && fs::exists(out_path) && !force) {
        throw InvalidInput("refusing to overwrite " + out_path + " (use --force)");
      }
      FitOptions opts;
      opts.box_cap = budgets.box_cap;
      std::string text = dump(to_json(fit_mu(data, opts)));
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
        out << dump(Json{{"system", data.id.to_string()}, {"out", out_path}, {"schema", kSchema}});
      }
      return kOk;
    }

    if (verify->parsed()) {
      RootSystemData data = build_root_system(sys.id());
      const int n = data.n;
      GeometricCoefficients coeffs = load_coefficients(data, "", cache_flag, budgets);
      VolumeTable table(data);
      Json rows = Json::array(), mismatches = Json::array(), simplex = Json::array();

      Coweight lambda(n, 0);
      for (;;) {
        Integer bruhat = bruhat_count(data, lambda, budgets);
        Integer lattice = interval_size_lattice(data, lambda, budgets.box_cap);
        Integer geometric = evaluate_formula(coeffs, table, lambda);
        ElementWithWord t = theta(data, lambda);
        Descents ds = descents(data, t.element);
        int sigma = sigma_reflection(data, coweight_vector(data, lambda));
        NodeSet all_nodes = NodeSet::full(n).with(0);
        bool descents_ok = NodeSet::full(n).is_subset_of(ds.left) &&
                           all_nodes.without(sigma).is_subset_of(ds.right);
        rows.push_back(Json{{"lambda", lambda},
                            {"bruhat", count_json(bruhat)},
                            {"lattice", count_json(lattice)},
                            {"geometric", count_json(geometric)},
                            {"descents_ok", descents_ok}});
        if (bruhat != lattice || lattice != geometric || !descents_ok) {
          mismatches.push_back(lambda_string(lambda));
        }
        int j = 0;
        while (j < n && lambda[j] == max_coord) lambda[j++] = 0;
        if (j == n) break;
        ++lambda[j];
      }

      if (data.id.family == 'A') {
        for (int kk = 1; kk <= n; ++kk) {
          MPoly e = hypersimplex_ehrhart(kk, n + 1);
          for (long m = 0; m <= max_coord; ++m) {
            Coweight l(n, 0);
            l[kk - 1] = m;
            Integer lattice = interval_size_lattice(data, l, budgets.box_cap);
            Rational predicted = Rational(factorial(n + 1)) * e.evaluate(std::vector<long>{m});
            bool ok = predicted == lattice;
            simplex.push_back(Json{{"k", kk}, {"m", m}, {"lattice", count_json(lattice)},
                                   {"hypersimplex", to_string(predicted)}, {"ok", ok}});
            if (!ok) mismatches.push_back("hypersimplex k=" + std::to_string(kk) + " m=" + std::to_string(m));
          }
        }
      }

      out << dump(Json{{"system", data.id.to_string()},
                       {"max_coord", max_coord},
                       {"rows", rows},
                       {"hypersimplex", simplex},
                       {"mismatches", mismatches},
                       {"ok", mismatches.empty()},
                       {"schema", kSchema}});
      if (!mismatches.empty()) {
        err << "mismatch at";
        for (const auto& m : mismatches) err << " " << m.get<std::string>();
        err << "\n";
        return kMismatch;
      }
      return kOk;
    }

    if (ehrhart->parsed()) {
      MPoly e = hypersimplex_ehrhart(k, d);
      out << dump(Json{{"k", k}, {"d", d}, {"poly", to_json(e)}, {"schema", kSchema}});
      return kOk;
    }

    if (volumes->parsed()) {
      RootSystemData data = build_root_system(sys.id());
      VolumeTable table(data);
      if (subset_given) {
        Json j = to_json(table.get(parse_subset(subset_text, data.n)));
        j["schema"] = kSchema;
        out << dump(j);
      } else {
        Json all = Json::array();
        for (NodeSet J : subsets_of(data.n)) all.push_back(to_json(table.get(J)));
        out << dump(Json{{"system", data.id.to_string()}, {"volumes", all}, {"schema", kSchema}});
      }
      return kOk;
    }

    if (rootsys->parsed()) {
      out << dump(to_json(build_root_system(sys.id())));
      return kOk;
    }

    if (faces->parsed()) {
      RootSystemData data = build_root_system(sys.id());
      Coweight lambda = parse_lambda(lambda_text, data.n);
      NodeSet J = parse_subset(subset_text, data.n);
      Json j = to_json(face(data, lambda, J), lambda);
      j["orbit_face_count"] = orbit_face_count(data, lambda, J);
      j["schema"] = kSchema;
      out << dump(j);
      return kOk;
    }

    if (theta_cmd->parsed()) {
      RootSystemData data = build_root_system(sys.id());
      Coweight lambda = parse_lambda(lambda_text, data.n);
      ElementWithWord t = theta(data, lambda);
      Descents ds = descents(data, t.element);
      Json j = to_json(t.element, &t.word);
      j["length"] = length(data, t.element);
      j["left_descents"] = ds.left.to_string();
      j["right_descents"] = ds.right.to_string();
      j["lambda"] = lambda;
      j["system"] = data.id.to_string();
      j["schema"] = kSchema;
      out << dump(j);
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << dump(error_json("budget", e.what()));
    return kBudget;
  } catch (const FitFailed& e) {
    err << dump(error_json("fit", e.what()));
    return kFitFailure;
  } catch (const InvalidInput& e) {
    err << dump(error_json("usage", e.what()));
    return kUsage;
  } catch (const MathError& e) {
    err << dump(error_json("math", e.what()));
    return kMismatch;
  } catch (const InternalError& e) {
    err << dump(error_json("internal", e.what()));
    return kMismatch;
  } catch (const fs::filesystem_error& e) {
    err << dump(error_json("io", e.what()));
    return kUsage;
  }
  return kUsage;
}

}  // namespace bruhat::cli
