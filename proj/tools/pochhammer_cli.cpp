// pochhammer: evaluate, tabulate and verify from the command line.
//
//   pochhammer eval nu --x 1
//   pochhammer eval rtilde-ext --x 2 --y 3 --z 2.5 --log-scaled --format json
//   pochhammer table stirling1 --max-n 6 --format csv
//   pochhammer verify --suite discrete
//
// Exit status: 0 ok, 1 verification failure, 2 usage error, 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <pochhammer/pochhammer.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace
{

using namespace pochhammer;
using json = nlohmann::ordered_json;

enum ExitCode
{
    exit_ok        = 0,
    exit_verify    = 1,
    exit_usage     = 2,
    exit_numerical = 3,
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string fmt(double v)
{
    return format_real(v);
}

//------------------------------------------------------------------------------
// eval
//------------------------------------------------------------------------------

struct EvalArgs
{
    std::string fn;
    std::map<std::string, std::optional<double>> values = {
        {"x", {}}, {"y", {}}, {"z", {}}, {"n", {}}, {"beta", {}}, {"alpha", {}}};
    std::optional<double> tol;
    bool log_scaled    = false;
    std::string format = "text";
};

struct EvalResult
{
    LogScaled value;
    bool converged = true;
    double plain   = std::numeric_limits<double>::quiet_NaN(); // exact double when one exists

    static EvalResult of(double v, bool converged = true)
    {
        return {LogScaled::from_double(v), converged, v};
    }
};

struct FunctionSpec
{
    std::vector<std::string> params; // all required
    bool uses_tol = false;
    std::function<EvalResult(const std::map<std::string, double>&, double)> run;
};

// Plain evaluation when the magnitude fits, so exact results print exactly.
EvalResult prefer_plain(const LogScaled& scaled, const std::function<double()>& plain)
{
    if (scaled.fits_double())
    {
        const double v = plain();
        if (std::isfinite(v))
            return EvalResult::of(v);
    }
    return EvalResult{scaled};
}

unsigned as_count(double v, const char* name)
{
    if (v < 0.0 || v != std::floor(v) || v > 1e6)
        throw UsageError(std::string("--") + name + " must be a non-negative integer");
    return static_cast<unsigned>(v);
}

const std::map<std::string, FunctionSpec>& functions()
{
    static const std::map<std::string, FunctionSpec> table = {
        {"r",
         {{"x", "y", "n"}, false,
          [](const auto& a, double) {
              const unsigned n = as_count(a.at("n"), "n");
              const double x = a.at("x"), y = a.at("y");
              const double plain = pochhammer_discrete(x, y, n);
              if (std::isfinite(plain))
                  return EvalResult::of(plain);
              LogScaled acc = LogScaled::from_double(1.0);
              for (unsigned l = 0; l < n; ++l)
                  acc = acc * LogScaled::from_double(x + l * y);
              return EvalResult{acc};
          }}},
        {"r-cont",
         {{"x", "y", "z"}, false,
          [](const auto& a, double) {
              return prefer_plain(pochhammer_continuous_scaled(a.at("x"), a.at("y"), a.at("z")),
                                  [&] { return pochhammer_continuous(a.at("x"), a.at("y"), a.at("z")); });
          }}},
        {"rtilde",
         {{"x", "y", "n"}, false,
          [](const auto& a, double) {
              const unsigned n = as_count(a.at("n"), "n");
              const double x   = a.at("x");
              if (x == 0.0 || n == 0)
                  return EvalResult{rtilde_poly_scaled(x, a.at("y"), n), true};
              return prefer_plain(rtilde_closed_scaled(x, a.at("y"), n), [&] { return rtilde_closed(x, a.at("y"), n); });
          }}},
        {"rtilde-ext",
         {{"x", "y", "z"}, true,
          [](const auto& a, double tol) {
              return prefer_plain(rtilde_ext_scaled(a.at("x"), a.at("y"), a.at("z"), tol),
                                  [&] { return rtilde_ext(a.at("x"), a.at("y"), a.at("z"), tol); });
          }}},
        {"rho",
         {{"x", "y", "z"}, true,
          [](const auto& a, double tol) {
              return prefer_plain(rho_scaled(a.at("x"), a.at("y"), a.at("z"), tol),
                                  [&] { return rho(a.at("x"), a.at("y"), a.at("z"), tol); });
          }}},
        {"E",
         {{"x", "z"}, true,
          [](const auto& a, double tol) {
              const auto r = E_series(a.at("x"), a.at("z"), tol);
              return EvalResult::of(r.value, r.converged);
          }}},
        {"nu",
         {{"x"}, true,
          [](const auto& a, double tol) { return EvalResult::of(nu(a.at("x"), tol)); }}},
        {"mu",
         {{"x", "beta", "alpha"}, true,
          [](const auto& a, double tol) {
              return EvalResult::of(mu_function(a.at("x"), a.at("beta"), a.at("alpha"), tol));
          }}},
        {"gamma",
         {{"x"}, false,
          [](const auto& a, double) {
              const double g = pochhammer::gamma(a.at("x"));
              return std::isfinite(g) ? EvalResult::of(g) : EvalResult{gamma_scaled(a.at("x"))};
          }}},
        {"gamma-y",
         {{"x", "y"}, false,
          [](const auto& a, double) {
              return prefer_plain(gamma_y_scaled(a.at("y"), a.at("x")), [&] { return gamma_y(a.at("y"), a.at("x")); });
          }}},
        {"Q",
         {{"z", "x"}, true,
          [](const auto& a, double tol) {
              const auto r = regularized_q(a.at("z"), a.at("x"), std::min(tol, 1e-14));
              return EvalResult::of(r.value, r.converged);
          }}},
    };
    return table;
}

constexpr const char* param_order[] = {"x", "y", "z", "n", "beta", "alpha"};

int run_eval(const EvalArgs& args)
{
    const auto it = functions().find(args.fn);
    if (it == functions().end())
        throw UsageError("unknown function: " + args.fn);
    const FunctionSpec& spec = it->second;

    const std::set<std::string> wanted(spec.params.begin(), spec.params.end());
    std::map<std::string, double> given;
    for (const auto& [name, v] : args.values)
    {
        if (v && !wanted.count(name))
            throw UsageError("eval " + args.fn + " does not take --" + name);
        if (!v && wanted.count(name))
            throw UsageError("eval " + args.fn + " requires --" + name);
        if (v)
            given[name] = *v;
    }
    if (args.tol && !spec.uses_tol)
        throw UsageError("eval " + args.fn + " does not take --tol");
    const double tol = args.tol.value_or(1e-10);
    if (!(tol > 0.0))
        throw UsageError("--tol must be > 0");

    const EvalResult r = spec.run(given, tol);
    if (!r.converged)
    {
        std::cerr << "error: eval " << args.fn << " did not converge at";
        for (const char* p : param_order)
            if (given.count(p))
                std::cerr << " " << p << "=" << fmt(given.at(p));
        std::cerr << "\n";
        return exit_numerical;
    }

    const bool fits  = std::isfinite(r.plain) || r.value.fits_double();
    const double val = std::isfinite(r.plain) ? r.plain : r.value.to_double();
    if (args.format == "text")
    {
        if (args.log_scaled)
            std::cout << r.value.sign << " " << fmt(r.value.log_magnitude) << "\n";
        else if (fits)
            std::cout << fmt(val) << "\n";
        else
        {
            std::cerr << "error: value overflows a double; rerun with --log-scaled\n";
            return exit_numerical;
        }
    }
    else if (args.format == "csv")
    {
        std::cout << "name";
        for (const char* p : param_order)
            if (given.count(p))
                std::cout << "," << p;
        std::cout << ",value,sign,log_magnitude,converged\n" << args.fn;
        for (const char* p : param_order)
            if (given.count(p))
                std::cout << "," << fmt(given.at(p));
        std::cout << "," << ((fits && !args.log_scaled) ? fmt(val) : "") << "," << r.value.sign << ","
                  << fmt(r.value.log_magnitude) << ",true\n";
    }
    else
    {
        json rec;
        rec["name"]   = args.fn;
        json inputs   = json::object();
        for (const char* p : param_order)
            if (given.count(p))
                inputs[p] = given.at(p);
        rec["inputs"] = inputs;
        rec["value"]  = (fits && !args.log_scaled) ? json(val) : json(nullptr);
        rec["sign"]   = r.value.sign;
        rec["log_magnitude"] =
            std::isfinite(r.value.log_magnitude) ? json(r.value.log_magnitude) : json(nullptr);
        rec["converged"] = true;
        std::cout << rec.dump() << "\n";
    }
    return exit_ok;
}

//------------------------------------------------------------------------------
// table
//------------------------------------------------------------------------------

using Rows = std::vector<std::vector<ExactRational>>;

Rows triangle_rows(const std::string& kind, std::size_t max_n)
{
    if (kind == "stirling1")
        return stirling_triangle(StirlingKind::first_unsigned, max_n).rows;
    if (kind == "stirling2")
        return stirling_triangle(StirlingKind::second, max_n).rows;
    if (kind == "rtilde")
        return rtilde_triangle(max_n).rtilde;
    if (kind == "stilde")
        return rtilde_triangle(max_n).stilde;
    if (kind == "Stilde")
        return rtilde_triangle(max_n).Stilde;
    throw UsageError("unknown table kind: " + kind);
}

// JSON array with one compact record per line.
void print_records(const json& records)
{
    std::cout << "[";
    for (std::size_t i = 0; i < records.size(); ++i)
        std::cout << (i == 0 ? "\n" : ",\n") << records[i].dump();
    std::cout << "\n]\n";
}

json rational_record(const std::string& name, json inputs, const ExactRational& q)
{
    json rec;
    rec["name"]   = name;
    rec["inputs"] = std::move(inputs);
    rec["value"]  = to_string(q);
    const int sign = q > 0 ? 1 : (q < 0 ? -1 : 0);
    rec["sign"]    = sign;
    rec["log_magnitude"] =
        sign == 0 ? json(nullptr)
                  : json(std::log(to_double(boost::multiprecision::numerator(q) < 0 ? ExactRational(-q) : q)));
    rec["converged"] = true;
    return rec;
}

int run_table(const std::string& kind, std::size_t max_n, const std::string& format)
{
    if (kind == "groupoid")
    {
        if (max_n > groupoid_max_gap + 1)
            throw UsageError("table groupoid: --max-n must be <= 19");
        if (format == "csv")
            std::cout << "n,k,G,Ge,Go\n";
        json out = json::array();
        for (unsigned n = 1; n <= max_n; ++n)
            for (unsigned k = 1; k <= n; ++k)
            {
                const auto g = groupoid_cardinalities(n, k);
                if (format == "csv")
                    std::cout << n << "," << k << "," << to_string(g.g) << "," << to_string(g.ge) << ","
                              << to_string(g.go) << "\n";
                else
                {
                    const json in = {{"n", n}, {"k", k}};
                    out.push_back(rational_record("G", in, g.g));
                    out.push_back(rational_record("Ge", in, g.ge));
                    out.push_back(rational_record("Go", in, g.go));
                }
            }
        if (format == "json")
            print_records(out);
        return exit_ok;
    }

    const Rows rows = triangle_rows(kind, max_n);
    if (format == "csv")
    {
        std::cout << "n";
        for (std::size_t k = 0; k <= max_n; ++k)
            std::cout << ",k" << k;
        std::cout << "\n";
        for (std::size_t n = 0; n <= max_n; ++n)
        {
            std::cout << n;
            for (std::size_t k = 0; k <= max_n; ++k)
                std::cout << "," << (k <= n ? to_string(rows[n][k]) : "");
            std::cout << "\n";
        }
        return exit_ok;
    }
    json out = json::array();
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            out.push_back(rational_record(kind, {{"n", n}, {"k", k}}, rows[n][k]));
    print_records(out);
    return exit_ok;
}

//------------------------------------------------------------------------------
// verify
//------------------------------------------------------------------------------

int run_verify(const std::string& suite, double tol_scale, const std::string& format, bool verbose)
{
    if (!(tol_scale > 0.0))
        throw UsageError("--tol-scale must be > 0");
    std::vector<VerificationReport> reports;
    try
    {
        reports = run_suites(suite, tol_scale);
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }

    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.ok();

    if (format == "json")
    {
        json out = json::array();
        for (const auto& r : reports)
        {
            json cases = json::array();
            for (const auto& c : r.cases)
                cases.push_back({{"id", c.id},
                                 {"inputs", c.inputs},
                                 {"expected", c.expected},
                                 {"actual", c.actual},
                                 {"residual", std::isfinite(c.residual) ? json(c.residual) : json(nullptr)},
                                 {"pass", c.pass}});
            out.push_back({{"suite", r.suite},
                           {"passed", r.passed()},
                           {"failed", r.failed()},
                           {"cases", std::move(cases)}});
        }
        std::cout << out.dump(1) << "\n";
    }
    else if (format == "csv")
    {
        std::cout << "id,inputs,expected,actual,residual,pass\n";
        for (const auto& r : reports)
            for (const auto& c : r.cases)
                std::cout << c.id << ",\"" << c.inputs << "\",\"" << c.expected << "\",\"" << c.actual << "\","
                          << fmt(c.residual) << "," << (c.pass ? "true" : "false") << "\n";
    }
    else
    {
        for (const auto& r : reports)
        {
            for (const auto& c : r.cases)
                if (verbose || !c.pass)
                    std::cout << (c.pass ? "pass " : "FAIL ") << c.id << " [" << c.inputs << "] expected "
                              << c.expected << " got " << c.actual << " residual " << fmt(c.residual) << "\n";
            std::cout << r.suite << ": " << r.passed() << "/" << r.cases.size() << " passed\n";
        }
    }
    return ok ? exit_ok : exit_verify;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Discrete and continuous Pochhammer symbols"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate one function");
    eval->add_option("fn", eval_args.fn, "r, r-cont, rtilde, rtilde-ext, rho, E, nu, mu, gamma, gamma-y, Q")
        ->required();
    for (auto& [name, slot] : eval_args.values)
        eval->add_option("--" + name, slot);
    eval->add_option("--tol", eval_args.tol, "Target tolerance (default 1e-10)");
    eval->add_flag("--log-scaled", eval_args.log_scaled, "Print sign and log-magnitude");
    eval->add_option("--format", eval_args.format)->check(CLI::IsMember({"text", "csv", "json"}));

    std::string table_kind;
    std::size_t table_max_n = 0;
    std::string table_format = "csv";
    auto* table = app.add_subcommand("table", "Emit an exact triangle");
    table->add_option("kind", table_kind, "stirling1, stirling2, rtilde, stilde, Stilde, groupoid")->required();
    table->add_option("--max-n", table_max_n)->required();
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

    std::string suite    = "all";
    double tol_scale     = 1.0;
    std::string v_format = "text";
    bool verbose         = false;
    auto* verify = app.add_subcommand("verify", "Run property suites");
    verify->add_option("--suite", suite, "all, kernel, recip, discrete, analogue1, analogue2");
    verify->add_option("--tol-scale", tol_scale, "Multiply every tolerance");
    verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "csv", "json"}));
    verify->add_flag("--verbose", verbose, "List passing cases too");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*eval)
            return run_eval(eval_args);
        if (*table)
            return run_table(table_kind, table_max_n, table_format);
        return run_verify(suite, tol_scale, v_format, verbose);
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::domain_error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::out_of_range& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const NumericalFailure& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
}
