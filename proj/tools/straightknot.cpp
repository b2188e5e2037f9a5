#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "straightknot/error.hpp"
#include "straightknot/families.hpp"
#include "straightknot/flype.hpp"
#include "straightknot/solver.hpp"
#include "straightknot/table.hpp"

#ifndef STRAIGHTKNOT_DEFAULT_TABLE
#define STRAIGHTKNOT_DEFAULT_TABLE "data/knots.jsonl"
#endif

using namespace sk;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Diagram read_pd(const std::string& path) { return validate_pd(parse_pd(read_file(path))); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << text;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "not an integer list: " + s);
    }
  }
  return v;
}

TemplateSpec parse_template(const std::string& s) {
  auto v = parse_ints(s);
  if (v.size() != 6) throw Error(ErrorKind::SpecInvalid, "need six values t1..t6");
  TemplateSpec t;
  std::copy(v.begin(), v.end(), t.t.begin());
  return t;
}

void emit_diagram(const Diagram& d, const std::string& how) {
  if (how == "gauss")
    std::cout << gauss_to_string(to_gauss(d)) << "\n";
  else
    std::cout << pd_to_string(d.pd) << "\n";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::Overflow:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"straight position diagrams and straight numbers of knots"};
  app.require_subcommand(1);
  std::string table_path = STRAIGHTKNOT_DEFAULT_TABLE;

  std::string pd_file, knot, witness_svg, emit = "pd", tspec, eps;
  int max_crossings = 10, threads = 0, crossings = 0, n = 0, m = 0, region = 0, twists = 1, axis = -1;
  bool no_prune = false, shadows_only = false, count_only = false, brute = false;

  auto* identify_cmd = app.add_subcommand("identify", "name a diagram by table fingerprint");
  identify_cmd->add_option("--pd", pd_file, "PD code file")->required();
  identify_cmd->add_option("--table", table_path, "knot table (JSON lines)");

  auto* sn = app.add_subcommand("straight-number", "search for the straight number");
  auto* knot_opt = sn->add_option("--knot", knot, "table name");
  sn->add_option("--pd", pd_file, "PD code file")->excludes(knot_opt);
  sn->add_option("--table", table_path, "knot table (JSON lines)");
  sn->add_option("--max-crossings", max_crossings, "largest level to search");
  sn->add_option("--threads", threads, "worker count");
  sn->add_option("--witness", witness_svg, "write the witness as SVG");
  sn->add_flag("--no-prune", no_prune, "disable R1/R2/mirror pruning");

  auto* en = app.add_subcommand("enumerate", "list straight shadows or codes");
  en->add_option("--crossings", crossings, "crossing count")->required();
  en->add_flag("--shadows-only", shadows_only, "shadows without over/under");
  en->add_flag("--count", count_only, "print only the count");
  en->add_flag("--no-prune", no_prune, "disable R1/R2/mirror pruning");

  auto* fam = app.add_subcommand("family", "braid-closure families");
  fam->require_subcommand(1);
  auto* fw = fam->add_subcommand("weaving", "weaving knot W(n,m)");
  fw->add_option("--n", n)->required();
  fw->add_option("--m", m)->required();
  fw->add_option("--emit", emit)->check(CLI::IsMember({"pd", "gauss"}));
  auto* fs = fam->add_subcommand("spiral", "spiral knot S(n,m,eps)");
  fs->add_option("--n", n)->required();
  fs->add_option("--m", m)->required();
  fs->add_option("--eps", eps, "comma separated +1/-1")->required();
  fs->add_option("--emit", emit)->check(CLI::IsMember({"pd", "gauss"}));

  auto* bd = app.add_subcommand("bound", "traversal bounds");
  bd->require_subcommand(1);
  auto* bw = bd->add_subcommand("weaving", "closed form for W(n,m)");
  bw->add_option("--n", n)->required();
  bw->add_option("--m", m)->required();
  bw->add_flag("--brute", brute, "also measure the longest simple arc");

  auto* tw = app.add_subcommand("twist", "twist regions");
  tw->require_subcommand(1);
  auto* ti = tw->add_subcommand("insert", "add full twists to a region");
  ti->add_option("--pd", pd_file)->required();
  ti->add_option("--region", region, "index into the region list")->required();
  ti->add_option("--full-twists", twists)->required();
  ti->add_option("--axis", axis, "for a lone crossing: 0 or 1");
  ti->add_option("--emit", emit)->check(CLI::IsMember({"pd", "gauss"}));

  auto* tp = app.add_subcommand("template", "template knots K_t");
  tp->add_option("--t", tspec, "t1,...,t6")->required();
  tp->add_option("--emit", emit)->check(CLI::IsMember({"pd", "gauss", "straight", "svg"}));

  auto* vf = app.add_subcommand("verify", "check one family instance");
  vf->require_subcommand(1);
  auto* vt = vf->add_subcommand("template", "str(K_t) = s + 2");
  vt->add_option("--t", tspec)->required();
  vt->add_option("--threads", threads);
  auto* vw = vf->add_subcommand("weaving", "W(n,m) is not perfectly straight");
  vw->add_option("--n", n)->required();
  vw->add_option("--m", m)->required();

  auto* fl = app.add_subcommand("flypes", "Conway circles and flype candidates");
  fl->add_option("--pd", pd_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*identify_cmd) {
      Table t = load_table(table_path);
      auto id = identify(read_pd(pd_file), t);
      if (!id) {
        std::cout << "no match\n";
        return 1;
      }
      std::cout << id->name;
      if (id->collision) {
        std::cout << " (collision:";
        for (auto& c : id->candidates) std::cout << " " << c;
        std::cout << ")";
      }
      std::cout << "\n";
      return 0;
    }
    if (*sn) {
      if (knot.empty() && pd_file.empty()) throw Error(ErrorKind::Parse, "give --knot or --pd");
      Table t = load_table(table_path);
      Diagram target;
      if (!knot.empty()) {
        const KnotRecord* r = t.find(knot);
        if (!r) throw Error(ErrorKind::Parse, "no knot named " + knot + " in the table");
        target = r->diagram;
      } else {
        target = read_pd(pd_file);
      }
      SolveOptions opt;
      opt.n_max = max_crossings;
      opt.threads = threads;
      opt.prune = !no_prune;
      auto res = straight_number(target, &t, opt);
      std::cout << solve_report_json(res) << "\n";
      if (res.witness && !witness_svg.empty()) write_file(witness_svg, render_svg(*res.witness));
      return res.status == SolveStatus::LowerBoundOnly ? 1 : 0;
    }
    if (*en) {
      if (crossings < 1) throw Error(ErrorKind::DomainError, "--crossings must be positive");
      PruneFlags f = no_prune ? PruneFlags{} : PruneFlags{true, true, true};
      auto shadows = enumerate_shadows(crossings);
      long total = 0;
      for (const auto& s : shadows) {
        if (shadows_only) {
          ++total;
          if (!count_only) std::cout << s.to_string() << "\n";
          continue;
        }
        for (const auto& b : shadow_overs(s, f)) {
          ++total;
          if (!count_only) std::cout << StraightCode{crossings, s.visits, s.sides, b}.to_string() << "\n";
        }
      }
      if (count_only) std::cout << total << "\n";
      return 0;
    }
    if (*fw) {
      emit_diagram(weaving(n, m), emit);
      return 0;
    }
    if (*fs) {
      emit_diagram(spiral(n, m, parse_ints(eps)), emit);
      return 0;
    }
    if (*bw) {
      int b = weaving_bound(n, m);
      std::cout << "closed form: " << b << "\n";
      if (brute) {
        Diagram d = weaving(n, m);
        std::cout << "termwise count: " << weaving_traversal_count(n, m) << "\n";
        std::cout << "max simple arc: " << max_simple_arc(d) << "\n";
        std::cout << "crossings: " << d.crossings() << "\n";
        return max_simple_arc(d) == b ? 0 : 1;
      }
      return 0;
    }
    if (*ti) {
      Diagram d = read_pd(pd_file);
      auto regions = twist_regions(d);
      if (region < 0 || region >= static_cast<int>(regions.size()))
        throw Error(ErrorKind::RegionInvalid, "region index out of range (" + std::to_string(regions.size()) + " regions)");
      TwistRegion r = regions[region];
      if (axis >= 0) {
        if (r.crossings.size() != 1) throw Error(ErrorKind::RegionInvalid, "--axis applies to single-crossing regions");
        r = singleton_region(d, r.crossings[0], axis);
      }
      emit_diagram(insert_full_twists(d, r, twists), emit);
      return 0;
    }
    if (*tp) {
      TemplateSpec spec = parse_template(tspec);
      if (emit == "straight")
        std::cout << template_straight_witness(spec).to_string() << "\n";
      else if (emit == "svg")
        std::cout << render_svg(template_straight_witness(spec));
      else
        emit_diagram(template_knot(spec), emit);
      return 0;
    }
    if (*vt) {
      auto rep = verify_template(parse_template(tspec), nullptr, threads);
      std::cout << rep.json() << "\n";
      return rep.straight_number ? 0 : 1;
    }
    if (*vw) {
      auto rep = verify_weaving(n, m);
      std::cout << rep.json() << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (*fl) {
      std::cout << flype_report_json(read_pd(pd_file)) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
