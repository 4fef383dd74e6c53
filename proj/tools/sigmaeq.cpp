// Command-line front end: enumeration, verification and the derived tables.
//
// Exit codes: 0 success, 1 verification or check failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <sigmaeq/sigmaeq.hpp>

namespace {

using namespace sigmaeq;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string token(std::uint64_t v) { return std::to_string(v); }
std::string token(const big_int& v) { return v.str(); }
std::string token(const big_rational& v)
{
    return '"' + numerator(v).str() + "/" + denominator(v).str() + '"';
}
std::string token(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}
std::string json_string(const std::string& s) { return '"' + s + '"'; }

// One output record; values are pre-rendered JSON tokens. Arrays are kept
// separately so CSV can join them with '|'.
struct field {
    std::string key;
    std::string scalar;
    std::vector<std::string> array;
    bool is_array = false;
};
using record = std::vector<field>;

field scalar(std::string key, std::string v) { return {std::move(key), std::move(v), {}, false}; }

template <class Int>
field array(std::string key, const std::vector<Int>& xs)
{
    field f{std::move(key), {}, {}, true};
    for (const auto& x : xs)
        f.array.push_back(token(x));
    return f;
}

enum class format { jsonl, csv };

class writer {
public:
    explicit writer(format fmt) : fmt_(fmt) {}

    void write(const record& r)
    {
        ++count_;
        if (fmt_ == format::jsonl) {
            std::string line = "{";
            for (std::size_t k = 0; k < r.size(); ++k) {
                if (k)
                    line += ',';
                line += json_string(r[k].key) + ':';
                if (r[k].is_array) {
                    line += '[';
                    for (std::size_t j = 0; j < r[k].array.size(); ++j)
                        line += (j ? "," : "") + r[k].array[j];
                    line += ']';
                } else {
                    line += r[k].scalar;
                }
            }
            std::cout << line << "}\n";
            return;
        }
        if (!header_done_) {
            for (std::size_t k = 0; k < r.size(); ++k)
                std::cout << (k ? "," : "") << r[k].key;
            std::cout << '\n';
            header_done_ = true;
        }
        for (std::size_t k = 0; k < r.size(); ++k) {
            std::cout << (k ? "," : "");
            if (r[k].is_array) {
                for (std::size_t j = 0; j < r[k].array.size(); ++j)
                    std::cout << (j ? "|" : "") << r[k].array[j];
            } else {
                std::cout << r[k].scalar;
            }
        }
        std::cout << '\n';
    }

    std::size_t count() const noexcept { return count_; }

private:
    format fmt_;
    bool header_done_ = false;
    std::size_t count_ = 0;
};

template <class Int>
record solution_record(const basic_compact_solution<Int>& c)
{
    return {scalar("n", token(c.n)),
            scalar("ones", token(c.ones)),
            array("tail", c.tail),
            scalar("m", token(*c.m)),
            scalar("i", token(std::uint64_t{c.i()})),
            scalar("distinct", token(std::uint64_t{distinct_count(c)}))};
}

std::vector<std::uint64_t> parse_tuple(const std::string& text)
{
    std::vector<std::uint64_t> xs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("not a comma-separated list of positive integers: " + text);
        try {
            xs.push_back(std::stoull(item));
        } catch (const std::out_of_range&) {
            throw usage_error("entry out of range: " + item);
        }
        if (xs.back() == 0)
            throw usage_error("entries must be positive");
    }
    return xs;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto k = std::stoull(text);
            return {k, k};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw usage_error("bad range (expected K or LO..HI): " + text);
    }
}

struct manifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(std::size_t result_count) const
    {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string params = "{";
        for (std::size_t k = 0; k < parameters.size(); ++k)
            params += (k ? "," : "") + json_string(parameters[k].first) + ':' + parameters[k].second;
        params += '}';
        std::cerr << "{\"manifest\":{\"command\":" << json_string(command) << ",\"parameters\":" << params
                  << ",\"version\":" << json_string(version) << ",\"elapsed_s\":" << token(secs)
                  << ",\"result_count\":" << result_count << "}}\n";
    }
};

constexpr std::uint64_t known_counts[] = {3, 2, 7, 4, 7, 5, 5, 10, 26, 10, 9, 10, 13, 9};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solutions of sigma_2(x_1..x_n) = sigma_n(x_1..x_n) in positive integers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    std::map<std::string, format> formats{{"jsonl", format::jsonl}, {"csv", format::csv}};
    format fmt = format::jsonl;
    unsigned jobs = 1;
    std::uint64_t n = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", fmt, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs,-j", jobs, "Worker threads for the enumerator")
            ->check(CLI::Range(1u, 1024u));
    };

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List S(n) in canonical order");
    enumerate_cmd->add_option("n", n, "Tuple length (>= 3)")->required();
    add_format(enumerate_cmd);
    add_jobs(enumerate_cmd);

    std::uint64_t n_max = 0;
    bool check = false;
    auto* table1_cmd = app.add_subcommand("table1", "|S(n)| for n = 3..N");
    table1_cmd->add_option("n_max", n_max, "Largest n")->required();
    table1_cmd->add_flag("--check", check, "Compare n <= 16 against the known counts");
    add_format(table1_cmd);
    add_jobs(table1_cmd);

    std::string tuple_text;
    auto* verify_cmd = app.add_subcommand("verify", "Check one tuple, e.g. 2,3,6");
    verify_cmd->add_option("tuple", tuple_text, "Comma-separated positive integers")->required();

    auto* pell_cmd = app.add_subcommand("pell", "Pell-equation families");
    pell_cmd->require_subcommand(1);
    std::uint64_t family_j = 0;
    auto* family_cmd = pell_cmd->add_subcommand("family", "(1.., 2, x, x) solutions, rows j = 0..J");
    family_cmd->add_option("j", family_j, "Last family index")->required();
    add_format(family_cmd);
    std::uint64_t ratio_a = 0, ratio_b = 0, ratio_count = 0;
    auto* ratio_cmd = pell_cmd->add_subcommand("ratio", "Solutions with d1:d2 = a:b");
    ratio_cmd->add_option("a", ratio_a)->required()->check(CLI::PositiveNumber);
    ratio_cmd->add_option("b", ratio_b)->required()->check(CLI::PositiveNumber);
    ratio_cmd->add_option("count", ratio_count)->required()->check(CLI::PositiveNumber);
    add_format(ratio_cmd);

    bool count_only = false;
    auto* s3_cmd = app.add_subcommand("s3", "Solutions with exactly three entries > 1");
    s3_cmd->add_option("n", n, "Tuple length (>= 3)")->required();
    s3_cmd->add_flag("--count", count_only, "Print only |S_3(n)|");
    add_format(s3_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "Search bounds for length n");
    bounds_cmd->add_option("n", n, "Tuple length (>= 3)")->required();
    add_format(bounds_cmd);

    auto* distinct_cmd = app.add_subcommand("distinct", "Distinct-value statistics");
    distinct_cmd->require_subcommand(1);
    auto* min_cmd = distinct_cmd->add_subcommand("min", "M(n): fewest distinct entries over S(n)");
    min_cmd->add_option("n", n)->required();
    add_format(min_cmd);
    add_jobs(min_cmd);
    std::string k_range = "3..4";
    std::uint64_t x_max = 200;
    auto* blocks_cmd = distinct_cmd->add_subcommand("blocks", "Solutions using only 1 and one x");
    blocks_cmd->add_option("--k", k_range, "Block length K or range LO..HI");
    blocks_cmd->add_option("--x-max", x_max, "Largest x to test");
    add_format(blocks_cmd);
    auto* construct_cmd =
        distinct_cmd->add_subcommand("construct", "Complete a tail to (1.., tail, Y)");
    construct_cmd->add_option("tail", tuple_text, "Comma-separated entries >= 2")->required();
    add_format(construct_cmd);
    std::uint64_t witness_m = 0;
    auto* witness_cmd =
        distinct_cmd->add_subcommand("witness", "Solution with m + 2 distinct values");
    witness_cmd->add_option("m", witness_m)->required();
    add_format(witness_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    writer out(fmt);
    manifest man;
    int status = exit_ok;
    std::optional<std::size_t> result_count;
    try {
        if (*enumerate_cmd) {
            man.command = "enumerate";
            man.parameters = {{"n", token(n)}, {"jobs", token(std::uint64_t{jobs})}};
            const auto sols = enumerate(n, jobs);
            for (const auto& c : sols)
                out.write(solution_record(c));
            std::cerr << "|S(" << n << ")|=" << sols.size() << '\n';
        } else if (*table1_cmd) {
            man.command = "table1";
            man.parameters = {{"n_max", token(n_max)}, {"check", std::string(check ? "true" : "false")}};
            if (n_max < 3)
                throw usage_error("n_max must be at least 3");
            for (std::uint64_t k = 3; k <= n_max; ++k) {
                const std::uint64_t count = enumerate(k, jobs).size();
                out.write({scalar("n", token(k)), scalar("count", token(count))});
                if (check && k <= 16 && count != known_counts[k - 3]) {
                    std::cerr << "mismatch at n=" << k << ": got " << count << ", expected "
                              << known_counts[k - 3] << '\n';
                    status = exit_check_failed;
                }
            }
            if (check)
                std::cerr << (status == exit_ok ? "table1 check: pass\n" : "table1 check: FAIL\n");
        } else if (*verify_cmd) {
            man.command = "verify";
            man.parameters.emplace_back("tuple", json_string(tuple_text));
            const auto xs = parse_tuple(tuple_text);
            if (xs.size() < 3)
                throw usage_error("a tuple needs at least 3 entries");
            const auto v = is_solution(solution_tuple(xs));
            if (v) {
                const auto& c = *v.solution;
                result_count = 1;
                std::cout << "solution, m=" << *c.m << ", i=" << c.i()
                          << ", distinct=" << distinct_count(c) << '\n';
            } else {
                std::cout << "not a solution (σ₂=" << v.sigma2 << ", σₙ=" << v.product << ")\n";
                result_count = 0;
                status = exit_check_failed;
            }
        } else if (*family_cmd) {
            man.command = "pell family";
            man.parameters = {{"j", token(family_j)}};
            for (std::uint64_t j = 0; j <= family_j; ++j) {
                const auto s = equal_pair_family(j);
                out.write({scalar("j", token(j)), scalar("n", token(s.n)), scalar("x", token(s.x))});
            }
        } else if (*ratio_cmd) {
            man.command = "pell ratio";
            man.parameters = {
                {"a", token(ratio_a)}, {"b", token(ratio_b)}, {"count", token(ratio_count)}};
            const double limit = ratio_limit(ratio_a, ratio_b);
            for (const auto& r : ratio_solutions(ratio_a, ratio_b, ratio_count))
                out.write({scalar("n", token(r.n)), scalar("y", token(r.y)), scalar("z", token(r.z)),
                           scalar("ratio", token(r.ratio_value)),
                           scalar("ratio_exact", token(r.ratio)), scalar("limit", token(limit))});
        } else if (*s3_cmd) {
            man.command = "s3";
            man.parameters = {{"n", token(n)}, {"count", std::string(count_only ? "true" : "false")}};
            const auto sols = s3_enumerate(n);
            if (count_only) {
                std::cout << sols.size() << '\n';
                result_count = sols.size();
            } else {
                for (const auto& s : sols) {
                    auto v = is_solution<std::uint64_t>(n - 3, {s.x, s.y, s.z});
                    out.write(solution_record(*v.solution));
                }
            }
            std::cerr << "|S_3(" << n << ")|=" << sols.size() << '\n';
        } else if (*bounds_cmd) {
            man.command = "bounds";
            man.parameters = {{"n", token(n)}};
            const auto b = bounds_for(n);
            out.write({scalar("n", token(b.n)),
                       scalar("prefix_product_max", token(b.prefix_product_max)),
                       scalar("i_max", token(b.i_max)), scalar("xn_max", token(b.xn_max)),
                       scalar("m_max", token(b.m_max)), scalar("xn2_max", token(b.xn2_max)),
                       scalar("forced_ones", token(forced_ones(n)))});
        } else if (*min_cmd) {
            man.command = "distinct min";
            man.parameters = {{"n", token(n)}};
            const auto m = min_distinct(n, jobs);
            out.write({scalar("n", token(n)), scalar("min_distinct", token(std::uint64_t{m}))});
        } else if (*blocks_cmd) {
            man.command = "distinct blocks";
            const auto [k_lo, k_hi] = parse_range(k_range);
            man.parameters = {{"k_lo", token(k_lo)}, {"k_hi", token(k_hi)}, {"x_max", token(x_max)}};
            for (const auto& h : search_equal_blocks(k_lo, k_hi, x_max))
                out.write({scalar("k", token(h.k)), scalar("n", token(h.n)), scalar("x", token(h.x)),
                           scalar("y", token(h.y))});
        } else if (*construct_cmd) {
            man.command = "distinct construct";
            man.parameters.emplace_back("tail", json_string(tuple_text));
            out.write(solution_record(construct_max_distinct(parse_tuple(tuple_text))));
        } else if (*witness_cmd) {
            man.command = "distinct witness";
            man.parameters = {{"m", token(witness_m)}};
            out.write(solution_record(max_distinct_witness(witness_m)));
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
    man.emit(result_count.value_or(out.count()));
    return status;
}
