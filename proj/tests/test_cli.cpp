#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spreadlab/cli.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/session.hpp"

using namespace spreadlab;

namespace {

const std::string kData = SPREADLAB_TEST_DATA;
const std::string kGolden = SPREADLAB_TEST_GOLDEN;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_words(std::vector<std::string> words) {
  words.insert(words.begin(), "spreadlab");
  std::vector<const char*> argv;
  for (const auto& w : words) argv.push_back(w.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Outcome run_line(std::string line) {
  for (auto pos = line.find("@DATA@"); pos != std::string::npos; pos = line.find("@DATA@")) line.replace(pos, 6, kData);
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return run_words(words);
}

std::vector<std::string> lines_of(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("spreadlab_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("golden outputs") {
  auto commands = lines_of(kGolden + "/commands.txt");
  auto expected = lines_of(kGolden + "/outputs.jsonl");
  REQUIRE(commands.size() == expected.size());
  for (std::size_t i = 0; i < commands.size(); ++i) {
    CAPTURE(commands[i]);
    auto r = run_line(commands[i]);
    CHECK(r.code == 0);
    CHECK(r.out == expected[i] + "\n");
  }
}

TEST_CASE("documented command examples") {
  auto ell = run_line("ell -f @DATA@/plane.ring -i p");
  CHECK(ell.out.find("\"ell\":2,\"ht\":2") != std::string::npos);
  CHECK(ell.out.find("\"equimultiple\":true") != std::string::npos);
  auto h0 = run_line("fatpoints h0 --r 16 --m 1 --d 4 --seed 42");
  CHECK(h0.out.find("\"seed\":42") != std::string::npos);
  CHECK(h0.out.find("\"h0\":0") != std::string::npos);
  auto dim = run_line("dim -f @DATA@/plane.ring -i zero");
  CHECK(dim.out.find("\"dim\":3") != std::string::npos);
  for (const auto* out : {&ell.out, &h0.out, &dim.out}) {
    CHECK(out->rfind("{\"schema\":\"1\",\"operation\":", 0) == 0);
    CHECK(out->find("\"input_digest\":\"") != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_line("").code == 2);
  CHECK(run_line("frobnicate").code == 2);
  auto unknown_flag = run_line("ell -f @DATA@/plane.ring -i p --bogus");
  CHECK(unknown_flag.code == 2);
  CHECK(unknown_flag.out.empty());
  CHECK(unknown_flag.err.find("Usage") != std::string::npos);
  CHECK(run_line("fatpoints h0 --r 16 --m 1 --d 4").code == 2);  // --seed is mandatory
  CHECK(run_line("ht -f @DATA@/plane.ring -i zero").code == 2);
  CHECK(run_line("ell -f @DATA@/plane.ring -i nosuch").code == 2);
  CHECK(run_line("ell -f @DATA@/missing.ring -i p").code == 2);
  CHECK(run_line("sp0 -f @DATA@/plane.ring -F P -n 1 --poly z -M 2").code == 2);
  CHECK(run_line("fatpoints h0 --r 100 --m 1 --d 4 --seed 1 --p 5").code == 2);
  auto help = run_line("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("fatpoints") != std::string::npos);

  auto bad = temp_file("bad.ring", "ring p=32003 vars=x,y\nideal a = x + y^2\nideal b = x\n");
  auto inhom = run_words({"ell", "-f", bad, "-i", "b"});
  CHECK(inhom.code == 2);
  CHECK(inhom.err.find("'a'") != std::string::npos);
  CHECK(run_words({"gb", "-f", bad, "-i", "a"}).code == 0);
}

TEST_CASE("identical inputs give byte-identical output") {
  for (const auto& line : lines_of(kGolden + "/commands.txt")) {
    CHECK(run_line(line).out == run_line(line).out);
  }
  // digest depends on content, not on how the session file is formatted
  auto a = temp_file("a.ring", "ring p=32003 vars=x,y,z\nideal p = x, y\n");
  auto b = temp_file("b.ring", "# same ring\nring   vars=x,y,z   p=32003\n\nideal p =   x ,y   # comment\n");
  CHECK(run_words({"ell", "-f", a, "-i", "p"}).out == run_words({"ell", "-f", b, "-i", "p"}).out);
  auto other = run_line("fatpoints h0 --r 16 --m 1 --d 4 --seed 43");
  CHECK(other.out != run_line("fatpoints h0 --r 16 --m 1 --d 4 --seed 42").out);
}

TEST_CASE("session round trip") {
  for (const auto* name : {"plane.ring", "curve.ring"}) {
    Session s = load_session(kData + "/" + name);
    std::string text = s.serialize();
    CHECK(parse_session(text).serialize() == text);
  }
  Session s = load_session(kData + "/curve.ring");
  CHECK(s.ring()->weights() == std::vector<int>{3, 4, 5});
  CHECK(s.ideals().size() == 2);
  CHECK(s.has_ideal("m"));
  CHECK(ideal_equal(s.ideal("m"), Ideal::maximal(s.ring())));
  CHECK(s.filtration("Sm").describe() == s.filtration("S").describe());
  CHECK_THROWS_AS(s.ideal("nosuch"), ArgumentError);
  CHECK_THROWS_AS(s.filtration("nosuch"), ArgumentError);
}

TEST_CASE("session parse errors") {
  CHECK_THROWS_AS(parse_session("ideal a = x\n"), ParseError);
  CHECK_THROWS_AS(parse_session(""), ParseError);
  CHECK_THROWS_AS(parse_session("ring p=32003 vars=x\nideal a = x\nideal a = x^2\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring p=32003 vars=x\nideal a = x\nfiltration a = adic:a\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring p=32003 vars=x\nfiltration F = adic:b\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring p=32003 vars=x\nfiltration F = weird:b\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring p=32003 vars=x\nideal a = w\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring p=32003 vars=x order=deglex\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring p=32003 vars=x\nring p=32003 vars=y\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring p=32003 vars=x\nthing a = x\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring p=32004 vars=x\n"), ArgumentError);
  try {
    parse_session("ring p=32003 vars=x\n\nideal a = x +\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
