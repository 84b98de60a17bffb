// Command-line front end: one problem document in, one result document out.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idealgb/document.hpp"

namespace fs = std::filesystem;
using idealgb::ExitCode;

namespace {

bool readFile(const fs::path& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

bool writeFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct BatchItem {
  fs::path input;
  fs::path output;
  idealgb::ProcessOutcome outcome;
};

int runBatch(const fs::path& dir, const std::string& outputDir,
             const idealgb::OptionOverrides& overrides, bool text) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << "error: " << dir.string() << " is not a directory\n";
    return static_cast<int>(ExitCode::Io);
  }
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto& p = entry.path();
    const std::string name = p.filename().string();
    if (entry.is_regular_file() && p.extension() == ".json" &&
        name.find(".result.") == std::string::npos) {
      inputs.push_back(p);
    }
  }
  std::sort(inputs.begin(), inputs.end());

  const fs::path target = outputDir.empty() ? dir : fs::path(outputDir);
  fs::create_directories(target, ec);
  if (ec) {
    std::cerr << "error: cannot create " << target.string() << ": " << ec.message() << "\n";
    return static_cast<int>(ExitCode::Io);
  }

  std::vector<std::future<BatchItem>> jobs;
  for (const auto& input : inputs) {
    jobs.push_back(std::async(std::launch::async, [&, input] {
      BatchItem item{input, target / (input.stem().string() + (text ? ".result.txt" : ".result.json")),
                     {}};
      std::string doc;
      if (!readFile(input, doc)) {
        item.outcome.diagnostics = "cannot read file";
        item.outcome.exitCode = ExitCode::Io;
        return item;
      }
      item.outcome = idealgb::processDocument(doc, overrides, text);
      if (item.outcome.exitCode != ExitCode::Io && !item.outcome.output.empty() &&
          !writeFile(item.output, item.outcome.output)) {
        item.outcome.diagnostics = "cannot write " + item.output.string();
        item.outcome.exitCode = ExitCode::Io;
      }
      return item;
    }));
  }

  int worst = 0;
  for (auto& job : jobs) {
    const BatchItem item = job.get();
    const int code = static_cast<int>(item.outcome.exitCode);
    std::cerr << item.input.filename().string() << ": ";
    if (code == 0) {
      std::cerr << "ok -> " << item.output.string() << "\n";
    } else {
      std::cerr << "exit " << code;
      if (!item.outcome.diagnostics.empty()) std::cerr << ": " << item.outcome.diagnostics;
      std::cerr << "\n";
    }
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced Groebner bases of ideal interpolation conditions"};

  std::string input, output, batchDir, algorithm, format = "json";
  bool noDInvariance = false, certificate = false, stats = false;
  app.add_option("--input", input, "Problem document (default: stdin)");
  app.add_option("--output", output, "Result file, or output directory with --batch (default: stdout)");
  app.add_option("--algorithm", algorithm, "Override the document's algorithm")
      ->check(CLI::IsMember({"auto", "single", "mmm", "splice"}));
  app.add_flag("--no-d-invariance-check", noDInvariance,
               "Run even when a condition space is not closed under differentiation");
  app.add_flag("--certificate", certificate, "Certify the result");
  app.add_flag("--stats", stats, "Report operation counters");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--batch", batchDir, "Process every *.json document in a directory")
      ->excludes("--input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }

  idealgb::OptionOverrides overrides;
  if (!algorithm.empty()) overrides.algorithm = idealgb::parseAlgorithm(algorithm);
  if (noDInvariance) overrides.checkDInvariance = false;
  if (certificate) overrides.emitCertificate = true;
  if (stats) overrides.emitStats = true;
  const bool text = format == "text";

  if (!batchDir.empty()) return runBatch(batchDir, output, overrides, text);

  std::string doc;
  if (input.empty() || input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    doc = buf.str();
  } else if (!readFile(input, doc)) {
    std::cerr << "error: cannot read " << input << "\n";
    return static_cast<int>(ExitCode::Io);
  }

  const auto outcome = idealgb::processDocument(doc, overrides, text);
  if (!outcome.diagnostics.empty()) std::cerr << outcome.diagnostics << "\n";
  if (!outcome.output.empty()) {
    if (output.empty() || output == "-") {
      std::cout << outcome.output;
    } else if (!writeFile(output, outcome.output)) {
      std::cerr << "error: cannot write " << output << "\n";
      return static_cast<int>(ExitCode::Io);
    }
  }
  return static_cast<int>(outcome.exitCode);
}
