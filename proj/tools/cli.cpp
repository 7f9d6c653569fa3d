#include "cli.hpp"

#include "mcg/abelian.hpp"
#include "mcg/homology.hpp"
#include "mcg/morphisms.hpp"
#include "mcg/presentation.hpp"
#include "mcg/rewrite.hpp"
#include "mcg/scripts.hpp"
#include "mcg/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mcg {

namespace {

namespace fs = std::filesystem;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot write " + out_path);
  f << text;
}

void check_report_format(const std::string& f) {
  if (f != "plain" && f != "json") throw UnsupportedFormat("unsupported report format '" + f + "' (plain, json)");
}

std::string render(const Report& r, const std::string& format) {
  return format == "json" ? to_json(r).dump(2) + "\n" : format_report(r);
}

// Scripts from every *.mcg file in dir, files taken in name order.
std::vector<DerivationScript> load_scripts(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".mcg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<DerivationScript> out;
  for (const auto& f : files) {
    try {
      auto part = parse_scripts(read_file(f));
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    } catch (const ScriptParseError& e) {
      throw InputError(f.filename().string() + ": " + e.what());
    }
  }
  return out;
}

Word read_word(const std::string& arg) {
  std::string text = arg;
  if (!text.empty() && text[0] == '@') text = read_file(text.substr(1));
  std::replace(text.begin(), text.end(), '\n', ' ');
  try {
    return parse_word(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad word: ") + e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Presentations of mapping class groups M_{g,n}", "mcg"};
  app.require_subcommand(1);

  int g = 0, n = 0;
  std::string format = "plain", scripts_dir, word_arg, out_path;
  bool no_handles = false;

  auto add_gn = [&](CLI::App* c) {
    c->add_option("g", g, "genus")->required();
    c->add_option("n", n, "boundary components")->required();
  };
  auto* gen = app.add_subcommand("gen", "print the presentation");
  auto* verify = app.add_subcommand("verify", "check configuration, relations and derived identities");
  auto* abel = app.add_subcommand("abel", "abelianization");
  auto* replay = app.add_subcommand("replay", "check derivation scripts");
  auto* map = app.add_subcommand("map", "apply the boundary-capping map to a word");
  auto* exp = app.add_subcommand("export", "write the presentation to a file");
  for (auto* c : {gen, verify, abel, replay, map, exp}) add_gn(c);

  gen->add_option("--format", format, "plain, gap-style, magma-style or json");
  gen->add_flag("--no-handles", no_handles, "eliminate c_{2i,2i+1} through the handle relations");
  gen->add_option("--out", out_path, "write to a file instead of stdout");
  exp->add_option("--format", format, "plain, gap-style, magma-style or json");
  exp->add_flag("--no-handles", no_handles);
  exp->add_option("--out", out_path)->required();
  verify->add_option("--format", format, "plain or json");
  verify->add_option("--out", out_path);
  abel->add_flag("--no-handles", no_handles);
  abel->add_option("--format", format, "plain or json");
  replay->add_option("--scripts", scripts_dir, "directory of .mcg script files");
  replay->add_option("--format", format, "plain or json");
  replay->add_option("--out", out_path);
  map->add_option("--word", word_arg, "word such as \"a1 b c2_4'\", or @file")->required();
  map->add_option("--format", format, "plain or json");
  map->add_option("--out", out_path);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Signature sig = make_signature(g, n);
    const CurveConfiguration cfg = shipped_configuration(sig);

    if (*gen || *exp) {
      const auto pres = presentation(sig, cfg, !no_handles);
      emit(export_presentation(pres, format), out_path, out);
      return 0;
    }

    if (*abel) {
      check_report_format(format);
      const auto inv = abelian_invariants(presentation(sig, cfg, !no_handles));
      if (format == "json") {
        json j;
        j["free_rank"] = inv.free_rank;
        j["torsion"] = json::array();
        for (const auto& t : inv.torsion) j["torsion"].push_back(t.get_str());
        j["group"] = format_invariants(inv);
        out << j.dump(2) << '\n';
      } else {
        out << format_invariants(inv) << '\n';
      }
      return 0;
    }

    if (*verify) {
      check_report_format(format);
      Report r;
      r.title = "verify (" + std::to_string(g) + "," + std::to_string(n) + ")";
      const auto v = validate_configuration(cfg);
      r.add("configuration", v.ok(), v.ok() ? "" : v.violations.front());
      r.append(check_presentation(cfg));
      r.append(HomologyOracle(cfg).check_equations(derived_identities(sig)));
      emit(render(r, format), out_path, out);
      return r.ok() ? 0 : 1;
    }

    if (*replay) {
      check_report_format(format);
      const auto scripts = scripts_dir.empty() ? shipped_scripts(sig) : load_scripts(scripts_dir);
      const auto pres = presentation(sig, cfg, true);
      auto outcome = replay_scripts(pres, scripts);
      Report r = outcome.report;
      r.title = "replay (" + std::to_string(g) + "," + std::to_string(n) + ")";
      for (auto e : verify_library(cfg, outcome.library).entries) {
        e.name = "oracle " + e.name;
        r.entries.push_back(std::move(e));
      }
      emit(render(r, format), out_path, out);
      return r.ok() ? 0 : 1;
    }

    if (*map) {
      check_report_format(format);
      const auto m = g2_generator_map(sig);
      const Word w = read_word(word_arg);
      for (const auto& l : w)
        if (!curve_in_signature(sig, l.gen)) throw InputError("generator " + l.gen.token() + " is not in G_{" +
                                                              std::to_string(g) + "," + std::to_string(n) + "}");
      const Word img = apply_gen_map(m, w);
      const Word red = reduce(img);
      if (format == "json") {
        json j;
        j["source"] = {g, n};
        j["target"] = {m.target.g, m.target.n};
        j["word"] = word_to_json(w);
        j["image"] = word_to_json(img);
        j["reduced"] = word_to_json(red);
        emit(j.dump(2) + "\n", out_path, out);
      } else {
        emit(format_word(red) + "\n", out_path, out);
      }
      return 0;
    }
  } catch (const DegenerateSignature& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateTarget& e) {
    err << "error: degenerate target: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace mcg
