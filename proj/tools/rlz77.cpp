/*
 * rlz77.cpp
 *
 *  Command line front end:
 *
 *    rlz77 compress   [input] [-o output] [--format binary|text] [--stats] [--max-n bytes]
 *    rlz77 decompress [input] [-o output] [--format binary|text]
 *    rlz77 stats      [input] [--max-n bytes]
 *
 *  Missing paths mean stdin/stdout. Exit codes: 0 success, 1 usage, 2 I/O,
 *  3 malformed input, 4 internal invariant breach.
 */

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "rlz77/rlz77.hpp"

using namespace rlz77;

namespace {

enum exit_code : int { ok = 0, usage = 1, io = 2, malformed = 3, internal = 4 };

struct io_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

class input_file {
public:
	explicit input_file(const std::string& path) {
		if (path.empty() || path == "-") {
			in_ = &std::cin;
			return;
		}
		file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
		if (!*file_) throw io_error("cannot open " + path);
		in_ = file_.get();
	}
	std::istream& get() { return *in_; }

private:
	std::unique_ptr<std::ifstream> file_;
	std::istream* in_ = nullptr;
};

class output_file {
public:
	explicit output_file(const std::string& path) : path_(path) {
		if (path.empty() || path == "-") {
			out_ = &std::cout;
			return;
		}
		file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
		if (!*file_) throw io_error("cannot open " + path + " for writing");
		out_ = file_.get();
	}
	std::ostream& get() { return *out_; }
	void close() {
		out_->flush();
		if (!*out_) throw io_error("write error on " + (path_.empty() ? std::string("stdout") : path_));
		if (file_) file_->close();
	}

private:
	std::string path_;
	std::unique_ptr<std::ofstream> file_;
	std::ostream* out_ = nullptr;
};

struct timed_parse {
	rlbwt bwt;
	parse_stats stats;
	double build_ms = 0;
	double parse_ms = 0;
};

template <class Sink>
timed_parse run_parse(std::istream& in, std::uint64_t max_n, Sink&& sink) {
	using clock = std::chrono::steady_clock;
	const auto t0 = clock::now();
	timed_parse r{build(in, max_n), {}, 0, 0};
	const auto t1 = clock::now();
	r.stats = factorize(r.bwt, sink);
	const auto t2 = clock::now();
	r.build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
	r.parse_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
	return r;
}

void print_stats(std::ostream& os, const timed_parse& r) {
	const auto nodes = r.bwt.nodes();
	os << "n=" << r.stats.text_length << '\n'
	   << "z=" << r.stats.factors << '\n'
	   << "R=" << r.stats.runs << '\n'
	   << "max_samples=" << r.stats.max_samples << '\n'
	   << "samples_within_2R=" << (r.stats.max_samples <= 2 * r.stats.runs ? 1 : 0) << '\n'
	   << "nodes_heads=" << nodes.heads << '\n'
	   << "nodes_run_starts=" << nodes.run_starts << '\n'
	   << "nodes_run_lengths=" << nodes.run_lengths << '\n'
	   << "nodes_symbol_counts=" << nodes.symbol_counts << '\n'
	   << "nodes_samples=" << r.stats.max_samples << '\n'
	   << "structure_steps=" << r.stats.steps << '\n'
	   << "phase1_ms=" << r.build_ms << '\n'
	   << "phase2_ms=" << r.parse_ms << '\n';
}

int compress(const std::string& in_path, const std::string& out_path, factor_format format, bool stats,
             std::uint64_t max_n) {
	input_file in(in_path);
	output_file out(out_path);
	timed_parse r;
	if (format == factor_format::binary) {
		binary_factor_writer w(out.get());
		r = run_parse(in.get(), max_n, w);
	} else {
		text_factor_writer w(out.get());
		r = run_parse(in.get(), max_n, w);
	}
	out.close();
	if (stats) print_stats(std::cerr, r);
	return ok;
}

int decompress(const std::string& in_path, const std::string& out_path, factor_format format) {
	input_file in(in_path);
	lz77_decoder dec;
	read_factors(in.get(), format, [&](const factor& f) { dec.push(f); });
	if (in.get().bad()) throw io_error("read error");
	const std::string& text = dec.text();
	output_file out(out_path);
	out.get().write(text.data(), static_cast<std::streamsize>(text.size()));
	out.close();
	return ok;
}

int stats(const std::string& in_path, std::uint64_t max_n) {
	input_file in(in_path);
	const auto r = run_parse(in.get(), max_n, [](const factor&) {});
	print_stats(std::cout, r);
	return ok;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"LZ77 factorization in run-length BWT space"};
	app.require_subcommand(1);

	std::string input, output;
	factor_format format = factor_format::binary;
	bool with_stats = false;
	std::uint64_t max_n = std::numeric_limits<std::uint64_t>::max();
	const std::map<std::string, factor_format> formats{{"binary", factor_format::binary}, {"text", factor_format::text}};

	auto* c = app.add_subcommand("compress", "write the LZ77 factors of the input");
	c->add_option("input", input, "input file (stdin if omitted)");
	c->add_option("-o,--output", output, "output file (stdout if omitted)");
	c->add_option("--format", format, "factor format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
	c->add_flag("--stats", with_stats, "print statistics to stderr");
	c->add_option("--max-n", max_n, "refuse inputs longer than this many bytes");

	auto* d = app.add_subcommand("decompress", "restore the input from its factors");
	d->add_option("input", input, "factor file (stdin if omitted)");
	d->add_option("-o,--output", output, "output file (stdout if omitted)");
	d->add_option("--format", format, "factor format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

	auto* s = app.add_subcommand("stats", "print parse statistics as key=value lines");
	s->add_option("input", input, "input file (stdin if omitted)");
	s->add_option("--max-n", max_n, "refuse inputs longer than this many bytes");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return usage;
	}

	std::ios::sync_with_stdio(false);
	try {
		if (c->parsed()) return compress(input, output, format, with_stats, max_n);
		if (d->parsed()) return decompress(input, output, format);
		return stats(input, max_n);
	} catch (const io_error& e) {
		std::cerr << "rlz77: " << e.what() << '\n';
		return io;
	} catch (const std::ios_base::failure& e) {
		std::cerr << "rlz77: " << e.what() << '\n';
		return io;
	} catch (const input_too_large& e) {
		std::cerr << "rlz77: " << e.what() << '\n';
		return io;
	} catch (const malformed_input& e) {
		std::cerr << "rlz77: malformed input: " << e.what() << '\n';
		return malformed;
	} catch (const std::exception& e) {
		std::cerr << "rlz77: internal error: " << e.what() << '\n';
		return internal;
	}
}
