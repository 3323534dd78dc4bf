#include "tsurf/errors.hpp"
#include "tsurf/monodromy.hpp"
#include "tsurf/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace tsurf;

namespace {

constexpr int kValidationExit = 2;

std::vector<Origami> read_surfaces(const std::string &path)
{
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
  }
  auto surfaces = parse_origami_file(buf.str());
  if (surfaces.empty())
    throw ValidationError("no origami lines in " + path);
  return surfaces;
}

ReportFormat parse_format(const std::string &s)
{
  return s == "svg" ? ReportFormat::Svg : ReportFormat::Text;
}

void emit(const Document &doc, const std::string &out_dir, const std::string &prefix)
{
  std::cout << doc.text;
  if (doc.svgs.empty())
    return;
  fs::create_directories(out_dir);
  for (const auto &[name, body] : doc.svgs) {
    fs::path p = fs::path(out_dir) / (prefix + name);
    std::ofstream(p) << body;
    std::cout << "wrote " << p.string() << "\n";
  }
}

std::vector<int> parse_kappa(const std::string &text)
{
  std::vector<int> kappa;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      kappa.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::logic_error &) {
      throw ValidationError("bad zero order '" + item + "' in stratum " + text);
    }
  }
  return kappa;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Cylinder decompositions, degenerations and Forni criteria for square-tiled surfaces"};
  app.require_subcommand(1);

  std::string file, format = "text", out_dir = "tsurf_out", stratum_text, shape_text;
  long direction_bound = 8;
  std::int64_t norm_bound = 1000000;
  int word_bound = 1;
  bool serial = false;

  auto *analyze = app.add_subcommand("analyze", "Classify each origami in a file");
  analyze->add_option("file", file, "Origami file, '-' for standard input")->required();
  analyze->add_option("--direction-bound", direction_bound, "Largest |p|, q of the directions p/q")->check(CLI::Range(1L, 64L));
  analyze->add_option("--format", format, "text or svg")->check(CLI::IsMember({"text", "svg"}));
  analyze->add_option("--out", out_dir, "Directory for SVG files");
  analyze->add_flag("--serial", serial, "Analyze directions on one thread");

  auto *enumerate = app.add_subcommand("enumerate", "Enumerate cylinder diagrams in a stratum");
  enumerate->add_option("--stratum", stratum_text, "Zero orders, e.g. 1,1,1,1")->required();
  enumerate->add_option("--shape", shape_text, "one_cylinder or case6")->required();
  enumerate->add_option("--format", format, "text or svg")->check(CLI::IsMember({"text", "svg"}));
  enumerate->add_option("--out", out_dir, "Directory for SVG files");

  auto *monodromy = app.add_subcommand("monodromy", "Affine stabilizer action on homology");
  monodromy->add_option("file", file, "Origami file, '-' for standard input")->required();
  monodromy->add_option("--norm-bound", norm_bound, "Entry bound for the closure search")->check(CLI::PositiveNumber);
  monodromy->add_option("--word-bound", word_bound, "Longest SL(2,Z) word tried")->check(CLI::Range(1, 6));

  auto *report = app.add_subcommand("report", "Full text and SVG report for each origami");
  report->add_option("file", file, "Origami file, '-' for standard input")->required();
  report->add_option("--direction-bound", direction_bound, "Largest |p|, q of the directions p/q")->check(CLI::Range(1L, 64L));
  report->add_option("--out", out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    AnalysisBounds bounds;
    bounds.direction_bound = direction_bound;
    bounds.parallel = !serial;

    if (*analyze) {
      auto surfaces = read_surfaces(file);
      for (std::size_t i = 0; i < surfaces.size(); ++i) {
        if (i)
          std::cout << "\n";
        Verdict v = classify_surface(surfaces[i], bounds);
        emit(render_report(v, parse_format(format)), out_dir, "surface" + std::to_string(i + 1) + "_");
      }
    } else if (*enumerate) {
      auto catalog = enumerate_diagrams(make_stratum(parse_kappa(stratum_text)), parse_shape(shape_text));
      emit(render_report(catalog, parse_format(format)), out_dir, "");
    } else if (*monodromy) {
      auto surfaces = read_surfaces(file);
      for (std::size_t i = 0; i < surfaces.size(); ++i) {
        if (i)
          std::cout << "\n";
        auto m = monodromy_report(surfaces[i], word_bound, norm_bound);
        std::cout << render_report(m, surfaces[i]).text;
      }
    } else if (*report) {
      auto surfaces = read_surfaces(file);
      fs::create_directories(out_dir);
      for (std::size_t i = 0; i < surfaces.size(); ++i) {
        std::string prefix = "surface" + std::to_string(i + 1) + "_";
        std::ostringstream text;
        Verdict v = classify_surface(surfaces[i], bounds);
        Document doc = render_report(v, ReportFormat::Svg);
        text << doc.text << "\n" << render_report(monodromy_report(surfaces[i]), surfaces[i]).text;
        auto forni = forni_upper_bound(surfaces[i], direction_bound);
        text << "Forni dimension bound: " << forni.upper_bound << "\n";
        doc.text = text.str();
        std::ofstream(fs::path(out_dir) / (prefix + "report.txt")) << doc.text;
        emit(doc, out_dir, prefix);
      }
    }
  } catch (const ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationExit;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
