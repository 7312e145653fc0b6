// wildbraid: exact verification of Steinberg-section rigidity, braid-variety
// point counts, and Stokes-diagram braid extraction.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed,
//             2 usage/configuration error, 3 enumeration budget exceeded.
#include "wildbraid/verify.hpp"

#include "wildbraid/numeric.hpp"
#include "wildbraid/stokes.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct GlobalOpts {
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 20250808;
};

int emit(const wildbraid::report::Report& rep, const GlobalOpts& g) {
  std::string text = g.format == "markdown" ? rep.to_markdown() : rep.to_json().dump(2) + "\n";
  if (g.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.out_path);
    out << text;
  }
  return rep.all_pass() ? 0 : 1;
}

std::vector<int> parse_letters(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rigidity checks for Kloosterman/Airy Stokes data"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--out", g.out_path, "write the report to a file");
  app.add_option("--seed", g.seed, "seed for randomized sweeps");

  // kloosterman
  std::string k_family = "SL", k_class;
  int k_n = 2;
  long k_q = 0;
  auto* k = app.add_subcommand("kloosterman", "Steinberg-section rigidity for one class");
  k->add_option("--group", k_family, "SL, GL or PGL");
  k->add_option("--n", k_n, "matrix size")->required();
  k->add_option("--class", k_class, "characteristic polynomial, e.g. \"x^2-3x+1\"");
  k->add_option("--q", k_q, "prime field size (0 = rationals)");

  // airy
  char a_type = 'A';
  int a_rank = 1;
  auto* a = app.add_subcommand("airy", "Airy rigidity package for a simple type");
  a->add_option("--type", a_type, "simple type A-G")->required();
  a->add_option("--rank", a_rank, "rank")->required();

  // full-twist
  char ft_type = 'A';
  int ft_rank = 2;
  auto* ft = app.add_subcommand("full-twist", "check c~^h = Delta^2 via normal forms");
  ft->add_option("--type", ft_type, "simple type A-G")->required();
  ft->add_option("--rank", ft_rank, "rank")->required();

  // stokes-braid
  char sb_type = 'A';
  int sb_rank = 1;
  std::string sb_slope = "1/2";
  bool sb_render = false;
  auto* sb = app.add_subcommand("stokes-braid", "extract the braid of an isoclinic class");
  sb->add_option("--type", sb_type, "simple type (A only)")->required();
  sb->add_option("--rank", sb_rank, "rank")->required();
  sb->add_option("--slope", sb_slope, "slope d/m in lowest terms")->required();
  sb->add_flag("--render", sb_render, "also print a plain-text diagram to stderr");

  // count
  std::string c_family = "SL", c_letters, c_target = "auto", c_class;
  int c_n = 2;
  long c_q = 7;
  auto* c = app.add_subcommand("count", "braid-variety point count over F_q");
  c->add_option("--group", c_family, "SL, GL or PGL");
  c->add_option("--n", c_n, "matrix size")->required();
  c->add_option("--letters", c_letters, "comma-separated braid letters")->required();
  c->add_option("--target", c_target, "auto, none, or a comma-separated Weyl word");
  c->add_option("--q", c_q, "prime field size")->required();
  c->add_option("--class", c_class, "optional monodromy class constraint");

  // table
  auto* t = app.add_subcommand("table", "centers and Coxeter numbers of the simple types");
  (void)t;

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  wildbraid::verify::Options opt;
  opt.seed = g.seed;

  try {
    wildbraid::report::Report rep;
    if (k->parsed()) {
      rep = wildbraid::verify::kloosterman(
          k_family, k_n, k_class, k_q == 0 ? std::nullopt : std::optional<long>(k_q), opt);
    } else if (a->parsed()) {
      rep = wildbraid::verify::airy(a_type, a_rank);
    } else if (ft->parsed()) {
      rep = wildbraid::verify::full_twist_check(ft_type, ft_rank, ft_rank <= 2);
    } else if (sb->parsed()) {
      long m = 0;
      long d = wildbraid::stokes::parse_slope(sb_slope, m);
      rep = wildbraid::verify::stokes_braid(sb_type, sb_rank, d, m);
      if (sb_render) {
        auto rs = wildbraid::rootdata::build_root_system(sb_type, sb_rank);
        auto spec = wildbraid::stokes::build_irregular_class(
            rs, d, m, wildbraid::stokes::default_labels(rs));
        std::cerr << wildbraid::stokes::render_ascii(wildbraid::stokes::compute_diagram(spec));
      }
    } else if (c->parsed()) {
      rep = wildbraid::verify::count_command(c_family, c_n, c_q, parse_letters(c_letters),
                                             c_target, c_class);
    } else if (t->parsed()) {
      rep = wildbraid::verify::center_table();
    }
    return emit(rep, g);
  } catch (const wildbraid::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const wildbraid::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const wildbraid::UnsupportedInput& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
