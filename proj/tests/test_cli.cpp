#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "rlz77/factor_codec.hpp"
#include "rlz77/parser.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace rlz77;

namespace {

class Cli : public ::testing::Test {
protected:
	void SetUp() override {
		dir_ = fs::temp_directory_path() /
		       ("rlz77_cli_" + std::to_string(::getpid()) + "_" +
		        ::testing::UnitTest::GetInstance()->current_test_info()->name());
		fs::create_directories(dir_);
	}
	void TearDown() override { fs::remove_all(dir_); }

	std::string path(const std::string& name) const { return (dir_ / name).string(); }

	static void put(const std::string& file, const std::string& bytes) {
		std::ofstream os(file, std::ios::binary);
		os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
	}
	static std::string get(const std::string& file) {
		std::ifstream is(file, std::ios::binary);
		std::ostringstream ss;
		ss << is.rdbuf();
		return ss.str();
	}

	// exit status of the command, stderr sent to a scratch file
	int run(const std::string& args) const {
		const std::string cmd = std::string("\"") + RLZ77_CLI_PATH + "\" " + args + " 2>\"" + path("stderr") + "\"";
		const int st = std::system(cmd.c_str());
		return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
	}

	std::string q(const std::string& name) const { return "\"" + path(name) + "\""; }

	fs::path dir_;
};

std::map<std::string, std::string> key_values(const std::string& report) {
	std::map<std::string, std::string> kv;
	std::istringstream is(report);
	std::string line;
	while (std::getline(is, line)) {
		const auto eq = line.find('=');
		if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
	}
	return kv;
}

} // namespace

TEST_F(Cli, RoundTripBothFormats) {
	std::mt19937_64 rng(5);
	std::string text = oracle::random_text(rng, 3000, 256, 0);
	text += text.substr(100, 900);
	put(path("in"), text);
	for (const char* format : {"binary", "text"}) {
		SCOPED_TRACE(format);
		ASSERT_EQ(run(std::string("compress ") + q("in") + " -o " + q("z") + " --format " + format), 0);
		ASSERT_EQ(run(std::string("decompress ") + q("z") + " -o " + q("out") + " --format " + format), 0);
		EXPECT_EQ(get(path("out")), text);
	}
}

TEST_F(Cli, StdinAndStdout) {
	put(path("in"), "abracadabra abracadabra");
	ASSERT_EQ(run("compress < " + q("in") + " > " + q("z")), 0);
	ASSERT_EQ(run("decompress < " + q("z") + " > " + q("out")), 0);
	EXPECT_EQ(get(path("out")), "abracadabra abracadabra");
}

TEST_F(Cli, EmptyInputGivesOneEndFactor) {
	put(path("in"), "");
	ASSERT_EQ(run("compress " + q("in") + " -o " + q("z") + " --format text"), 0);
	EXPECT_EQ(get(path("z")), "(_,0,$)\n");
	ASSERT_EQ(run("decompress " + q("z") + " -o " + q("out") + " --format text"), 0);
	EXPECT_EQ(get(path("out")), "");
}

TEST_F(Cli, BinaryOutputMatchesLibrary) {
	const std::string text = "mississippi$mississippi";
	put(path("in"), text);
	ASSERT_EQ(run("compress " + q("in") + " -o " + q("z")), 0);
	std::ostringstream want;
	binary_factor_writer w(want);
	for (const auto& f : lz77(text)) w(f);
	EXPECT_EQ(get(path("z")), want.str());
}

TEST_F(Cli, UnwritableOutputIsIoError) {
	put(path("in"), "abc");
	EXPECT_EQ(run("compress " + q("in") + " -o " + q("no/such/dir/z")), 2);
	EXPECT_EQ(run("compress " + q("missing")), 2);
}

TEST_F(Cli, UsageErrors) {
	EXPECT_EQ(run(""), 1);
	EXPECT_EQ(run("squash"), 1);
	EXPECT_EQ(run("compress --format zip"), 1);
}

TEST_F(Cli, MaxNGuard) {
	put(path("in"), std::string(1000, 'x'));
	EXPECT_EQ(run("compress " + q("in") + " --max-n 999 -o " + q("z")), 2);
	EXPECT_EQ(run("compress " + q("in") + " --max-n 1000 -o " + q("z")), 0);
}

TEST_F(Cli, TruncatedFactorFileIsRejected) {
	put(path("in"), "abababababcabababab");
	ASSERT_EQ(run("compress " + q("in") + " -o " + q("z")), 0);
	const auto z = get(path("z"));
	put(path("cut"), z.substr(0, z.size() - 1));
	EXPECT_EQ(run("decompress " + q("cut") + " -o " + q("out")), 3);
	EXPECT_FALSE(fs::exists(path("out")));
}

TEST_F(Cli, TextFileFedToBinaryDecoderIsRejected) {
	put(path("in"), "hello hello");
	ASSERT_EQ(run("compress " + q("in") + " --format text -o " + q("z")), 0);
	EXPECT_EQ(run("decompress " + q("z") + " -o " + q("out")), 3);
	EXPECT_FALSE(fs::exists(path("out")));
}

TEST_F(Cli, StatsReport) {
	std::mt19937_64 rng(1);
	const auto block = oracle::random_text(rng, 1000, 256, 0);
	std::string text;
	for (int i = 0; i < 100; ++i) text += block;
	put(path("in"), text);
	ASSERT_EQ(run("stats " + q("in") + " > " + q("report")), 0);
	auto kv = key_values(get(path("report")));
	for (const char* key : {"n", "z", "R", "max_samples", "samples_within_2R", "phase1_ms", "phase2_ms"})
		EXPECT_TRUE(kv.count(key)) << key;
	EXPECT_EQ(std::stoull(kv["n"]), text.size() + 1);
	EXPECT_EQ(kv["samples_within_2R"], "1");
	EXPECT_LE(std::stoull(kv["max_samples"]), 2 * std::stoull(kv["R"]));
	EXPECT_LT(std::stoull(kv["R"]) * 20, text.size());
	EXPECT_LT(std::stoull(kv["z"]) * 20, text.size());

	const auto bwt = build(text);
	EXPECT_EQ(std::stoull(kv["R"]), bwt.heads().size());
	EXPECT_EQ(std::stoull(kv["z"]), lz77(text).size());

	// compress --stats reports the same counts on stderr
	ASSERT_EQ(run("compress --stats " + q("in") + " -o " + q("z")), 0);
	auto kv2 = key_values(get(path("stderr")));
	EXPECT_EQ(kv2["z"], kv["z"]);
	EXPECT_EQ(kv2["R"], kv["R"]);
}
