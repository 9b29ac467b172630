#include "bicd/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "bicd/certify.hpp"
#include "bicd/conditions.hpp"
#include "bicd/constructor.hpp"
#include "bicd/oracle.hpp"

namespace bicd {

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kGap = 3;

using ojson = nlohmann::ordered_json;

struct Instance {
  int lambda = 0;
  int v = 0;
  int u = 0;
  std::string m;

  GraphSpec spec() const {
    GraphSpec s{lambda, v, u};
    s.validate();
    return s;
  }
};

double default_budget() {
  if (const char* env = std::getenv("BICD_ORACLE_BUDGET")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Input, "BICD_ORACLE_BUDGET is not a number");
    }
  }
  return 10.0;
}

LengthSeq parse_lengths(const std::string& text, std::ostream& err) {
  LengthSeq m = LengthSeq::parse(text);
  // LengthSeq sorts; re-read the raw order only to warn about it.
  std::vector<int> raw;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") != std::string::npos) raw.push_back(std::stoi(item));
  }
  if (!std::is_sorted(raw.begin(), raw.end())) err << "warning: M reordered to " << to_string(m) << "\n";
  return m;
}

void add_instance_options(CLI::App* cmd, Instance& in, bool need_m) {
  cmd->add_option("--lambda", in.lambda, "edge multiplicity")->required();
  cmd->add_option("--v", in.v, "left part size")->required();
  cmd->add_option("--u", in.u, "right part size")->required();
  auto* m = cmd->add_option("--m", in.m, "comma-separated cycle lengths");
  if (need_m) m->required();
}

ojson cert_json(const Packing& p) { return ojson::parse(write_certificate(Certificate::from(p))); }

int emit_certificate(const Packing& p, const std::string& path, std::ostream& out, std::ostream& err) {
  const Certificate cert = Certificate::from(p);
  const Verdict check = verify_certificate(cert);
  if (!check.valid) {
    err << "internal: emitted certificate fails verification: " << check.reason << "\n";
    return kGap;
  }
  const std::string text = write_certificate(cert);
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path);
    if (!f) {
      err << "cannot write " << path << "\n";
      return kUsage;
    }
    f << text;
  }
  return kOk;
}

void write_trace(const AuditLog& log, bool trace, std::ostream& err) {
  if (trace) log.write(err);
}

int cmd_check(const Instance& in, bool machine, std::ostream& out, std::ostream& err) {
  const GraphSpec spec = in.spec();
  const LengthSeq m = parse_lengths(in.m, err);
  const NecessaryVerdict nec = check_necessary(spec, m);
  const CoverageVerdict cov = check_constructive_hypotheses(spec, m);
  if (machine) {
    ojson j;
    j["command"] = "check";
    j["M"] = m.lengths();
    j["necessary"] = nec.pass ? "pass" : "fail";
    if (!nec.pass) {
      j["condition"] = nec.condition;
      j["detail"] = nec.detail;
    }
    j["coverage"] = cov.covered ? "covered" : "not-covered";
    if (!cov.covered) j["reason"] = cov.reason;
    out << j.dump() << "\n";
  } else {
    out << "necessary: " << nec.to_string() << "\n";
    out << "coverage: " << cov.to_string() << "\n";
  }
  return nec.pass && cov.covered ? kOk : kNo;
}

int oracle_route(const GraphSpec& spec, const LengthSeq& m, double budget, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  const OracleResult r = oracle_decide(spec, m, budget);
  err << "oracle: " << to_string(r.status) << " after " << r.nodes << " nodes\n";
  if (r.status == OracleStatus::Exists) return emit_certificate(*r.witness, path, out, err);
  return r.status == OracleStatus::NotExists ? kNo : kGap;
}

int cmd_decompose(const Instance& in, bool allow_oracle, double budget, const std::string& path, bool trace,
                  std::ostream& out, std::ostream& err) {
  const GraphSpec spec = in.spec();
  const LengthSeq m = parse_lengths(in.m, err);
  const NecessaryVerdict nec = check_necessary(spec, m);
  if (!nec.pass) {
    err << "necessary: " << nec.to_string() << "\n";
    return kNo;
  }
  const CoverageVerdict cov = check_constructive_hypotheses(spec, m);
  if (cov.covered || is_base_shape(spec, m)) {
    AuditLog log;
    DecomposeOptions opts;
    opts.log = &log;
    try {
      const Packing p = decompose(spec, m, opts);
      write_trace(log, trace, err);
      err << "method: constructive\n";
      return emit_certificate(p, path, out, err);
    } catch (const Error& e) {
      write_trace(log, trace, err);
      if (e.kind() != ErrorKind::ConstructiveGap) throw;
      err << e.what() << "\n";
      if (!allow_oracle) return kGap;
    }
  } else {
    err << cov.to_string() << "\n";
    if (!allow_oracle) return kNo;
  }
  err << "method: oracle\n";
  return oracle_route(spec, m, budget, path, out, err);
}

int cmd_verify(const std::string& path, bool machine, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  Verdict v;
  try {
    v = verify_certificate(read_certificate(buf.str()));
  } catch (const Error& e) {
    v = {false, e.what()};
  }
  if (machine) {
    ojson j;
    j["command"] = "verify";
    j["valid"] = v.valid;
    if (!v.valid) j["reason"] = v.reason;
    out << j.dump() << "\n";
  } else {
    out << v.to_string() << "\n";
  }
  return v.valid ? kOk : kNo;
}

int cmd_oracle(const Instance& in, double budget, bool machine, std::ostream& out, std::ostream& err) {
  const GraphSpec spec = in.spec();
  if (!in.m.empty()) {
    const LengthSeq m = parse_lengths(in.m, err);
    const OracleResult r = oracle_decide(spec, m, budget);
    if (machine) {
      ojson j;
      j["command"] = "oracle";
      j["M"] = m.lengths();
      j["status"] = std::string(to_string(r.status));
      j["nodes"] = r.nodes;
      if (r.witness) j["certificate"] = cert_json(*r.witness);
      out << j.dump() << "\n";
    } else {
      out << to_string(r.status) << " (" << r.nodes << " nodes)\n";
      if (r.witness) out << write_certificate(Certificate::from(*r.witness));
    }
    if (r.status == OracleStatus::Exists) return kOk;
    return r.status == OracleStatus::NotExists ? kNo : kGap;
  }
  bool timeouts = false;
  for (const CensusEntry& e : oracle_enumerate(spec, budget)) {
    timeouts |= e.status == OracleStatus::Timeout;
    if (machine) {
      ojson j;
      j["M"] = e.m.lengths();
      j["status"] = std::string(to_string(e.status));
      out << j.dump() << "\n";
    } else {
      out << std::left << std::setw(28) << to_string(e.m) << " " << to_string(e.status) << "\n";
    }
  }
  return timeouts ? kGap : kOk;
}

struct SweepArgs {
  int lambda_min = 1;
  int lambda_max = 2;
  int v_min = 1;
  int vu_max = 4;
  long oracle_max = 24;
  bool allow_oracle = false;
};

int cmd_sweep(const SweepArgs& a, double budget, bool machine, std::ostream& out, std::ostream& err) {
  int rows = 0;
  int constructed = 0;
  int gaps = 0;
  int timeouts = 0;
  for (int lambda = a.lambda_min; lambda <= a.lambda_max; ++lambda) {
    for (int v = a.v_min; v <= a.vu_max; ++v) {
      for (int u = v; u <= a.vu_max; ++u) {
        const GraphSpec spec{lambda, v, u};
        if (spec.total_edges() % 2 != 0) continue;
        for (const LengthSeq& m : even_partitions(static_cast<int>(spec.total_edges()))) {
          if (!check_necessary(spec, m).pass) continue;
          const CoverageVerdict cov = check_constructive_hypotheses(spec, m);
          std::string result = "-";
          const bool small = spec.total_edges() <= a.oracle_max;
          auto ask_oracle = [&]() {
            const OracleStatus s = oracle_decide(spec, m, budget).status;
            timeouts += s == OracleStatus::Timeout;
            return "oracle:" + std::string(to_string(s));
          };
          if (cov.covered || is_base_shape(spec, m)) {
            try {
              const Packing p = decompose(spec, m);
              const Certificate cert = read_certificate(write_certificate(Certificate::from(p)));
              result = verify_certificate(cert).valid ? "constructed" : "invalid";
              constructed += result == "constructed";
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::ConstructiveGap) throw;
              result = "gap";
              ++gaps;
              if (a.allow_oracle && small) result += "/" + ask_oracle();
            }
          } else if (small) {
            result = ask_oracle();
          }
          ++rows;
          if (machine) {
            ojson j;
            j["lambda"] = lambda;
            j["v"] = v;
            j["u"] = u;
            j["M"] = m.lengths();
            j["coverage"] = cov.covered ? "covered" : "not-covered";
            j["result"] = result;
            out << j.dump() << "\n";
          } else {
            out << lambda << " " << v << " " << u << "  " << std::left << std::setw(30) << to_string(m) << " "
                << std::setw(12) << (cov.covered ? "covered" : "not-covered") << " " << result << "\n";
          }
        }
      }
    }
  }
  err << "sweep: " << rows << " instances passing the necessary conditions, " << constructed << " constructed, "
      << gaps << " gaps, " << timeouts << " oracle timeouts\n";
  return gaps > 0 || timeouts > 0 ? kGap : kOk;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle decompositions of complete bipartite multigraphs"};
  app.require_subcommand(1);
  std::string format = "text";
  bool trace = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--trace", trace, "print the switch audit log to stderr");

  double budget = -1;
  Instance in;
  auto* check = app.add_subcommand("check", "necessary conditions and constructive coverage");
  add_instance_options(check, in, true);

  bool allow_oracle = false;
  std::string out_path;
  auto* dec = app.add_subcommand("decompose", "build and print a certificate");
  add_instance_options(dec, in, true);
  dec->add_flag("--allow-oracle", allow_oracle, "fall back to exhaustive search");
  dec->add_option("--budget", budget, "oracle budget in seconds");
  dec->add_option("--out", out_path, "write the certificate here instead of stdout");

  std::string cert_path;
  auto* ver = app.add_subcommand("verify", "check a certificate");
  ver->add_option("--cert", cert_path, "certificate file")->required();

  auto* orc = app.add_subcommand("oracle", "exhaustive decision (with --m) or census (without)");
  add_instance_options(orc, in, false);
  orc->add_option("--budget", budget, "seconds per sequence");

  SweepArgs sw;
  auto* swp = app.add_subcommand("sweep", "census over small instances");
  swp->add_option("--lambda-max", sw.lambda_max, "largest lambda")->required();
  swp->add_option("--vu-max", sw.vu_max, "largest part size")->required();
  swp->add_option("--lambda-min", sw.lambda_min, "smallest lambda");
  swp->add_option("--v-min", sw.v_min, "smallest part size");
  swp->add_option("--oracle-max", sw.oracle_max, "ask the oracle when lambda*v*u is at most this");
  swp->add_flag("--allow-oracle", sw.allow_oracle, "send constructive gaps to the oracle");
  swp->add_option("--budget", budget, "oracle seconds per instance");

  for (auto* sub : {check, dec, ver, orc, swp}) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
    sub->add_flag("--trace", trace, "print the switch audit log to stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  const bool machine = format == "machine";
  try {
    if (budget < 0) budget = default_budget();
    if (check->parsed()) return cmd_check(in, machine, out, err);
    if (dec->parsed()) return cmd_decompose(in, allow_oracle, budget, out_path, trace, out, err);
    if (ver->parsed()) return cmd_verify(cert_path, machine, out, err);
    if (orc->parsed()) return cmd_oracle(in, budget, machine, out, err);
    if (swp->parsed()) return cmd_sweep(sw, budget, machine, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.kind() == ErrorKind::Input) return kUsage;
    if (e.kind() == ErrorKind::LemmaPrecondition) return kNo;
    return kGap;
  } catch (const std::invalid_argument& e) {
    err << "bad number: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bicd
