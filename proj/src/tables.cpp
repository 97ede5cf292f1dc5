#include "prmkit/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "prmkit/subfield.hpp"

namespace prmkit {

namespace detail {
const std::map<std::string, std::string_view>& golden_files();
}

namespace {

struct TableName {
    TableId id;
    const char* name;
};

constexpr TableName kNames[] = {
    {TableId::GoodParams, "goodparams"}, {TableId::Q3M2, "q3m2"},       {TableId::Q3M3, "q3m3"},
    {TableId::Q4M2, "q4m2"},             {TableId::Q5M2, "q5m2"},       {TableId::Q3M3Bis, "q3m3bis"},
    {TableId::Q4M2Bis, "q4m2bis"},       {TableId::Q5M2Bis, "q5m2bis"},
};

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Data lines of a golden CSV, skipping comments, blanks and the header.
std::vector<std::vector<std::string>> data_lines(std::string_view csv) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in{std::string(csv)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        out.push_back(split(line, ','));
    }
    return out;
}

std::uint64_t to_u64(const std::string& s) {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer in golden data: " + s);
    return v;
}

}  // namespace

std::string to_string(TableId id) {
    for (const auto& t : kNames)
        if (t.id == id) return t.name;
    throw std::invalid_argument("unknown table id");
}

std::optional<TableId> table_from_string(std::string_view s) {
    for (const auto& t : kNames)
        if (s == t.name) return t.id;
    return std::nullopt;
}

std::vector<TableId> all_tables() {
    std::vector<TableId> out;
    for (const auto& t : kNames) out.push_back(t.id);
    return out;
}

std::string GhwCell::text() const {
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
}

GhwTable ghw_table_shape(TableId id) {
    GhwTable t;
    t.id = id;
    switch (id) {
        case TableId::Q3M2: t.Q = 3; t.m = 2; break;
        case TableId::Q3M3: t.Q = 3; t.m = 3; break;
        case TableId::Q4M2: t.Q = 4; t.m = 2; break;
        case TableId::Q5M2: t.Q = 5; t.m = 2; break;
        case TableId::Q3M3Bis: t.Q = 3; t.m = 3; t.refined = true; break;
        case TableId::Q4M2Bis: t.Q = 4; t.m = 2; t.refined = true; break;
        case TableId::Q5M2Bis: t.Q = 5; t.m = 2; t.refined = true; break;
        case TableId::GoodParams: throw std::invalid_argument("goodparams is not a GHW table");
    }
    return t;
}

GhwTable generate_ghw_table(TableId id, GhwEngine& engine) {
    GhwTable t = ghw_table_shape(id);
    const int q1 = static_cast<int>(t.Q - 1);
    for (int d = 1; d <= t.m * q1; ++d) {
        if (t.refined && d % q1 == 0) continue;
        auto rep = t.refined ? engine.refined(t.Q, t.m, d) : engine.bounds(t.Q, t.m, d);
        for (const auto& rec : rep->records)
            if (rec.r >= 2) t.cells.push_back({d, rec.r, rec.lower, rec.upper});
    }
    return t;
}

GoodParamsRow good_params_row(int q, int s, int m, int lambda, bool dual, const MinDistanceOptions& opt) {
    GoodParamsRow row;
    row.q = q;
    row.s = s;
    row.m = m;
    row.lambda = lambda;
    row.dual = dual;
    const int d = d_lambda(q, s, lambda);
    const auto Q = ipow(static_cast<std::uint64_t>(q), s);
    SscCode ssc = ssc_prm(q, s, m, d);
    LinearCode code = dual ? dual_code(ssc.code) : ssc.code;
    row.n = code.n();
    row.k = code.k();
    auto res = min_distance_exact(code, opt);
    if (res.exact()) {
        row.status = DistanceStatus::Exact;
        row.d1 = res.value;
        row.method = res.method;
    } else if (!dual) {
        row.status = DistanceStatus::Bound;
        row.d1 = prm_params(Q, m, d).d1;
        row.method = "parent distance";
    } else {
        row.method = "over cap";
    }
    return row;
}

std::vector<GoodParamsRow> generate_good_params(const MinDistanceOptions& opt) {
    std::vector<GoodParamsRow> out;
    for (const auto& g : parse_good_params(golden_source(TableId::GoodParams)))
        out.push_back(good_params_row(g.q, g.s, g.m, g.lambda, g.dual, opt));
    return out;
}

std::string_view golden_source(TableId id) {
    const auto& files = detail::golden_files();
    auto it = files.find(to_string(id));
    if (it == files.end()) throw std::logic_error("golden data missing for " + to_string(id));
    return it->second;
}

std::vector<GhwCell> parse_ghw_cells(std::string_view csv) {
    std::vector<GhwCell> out;
    for (const auto& f : data_lines(csv)) {
        if (f.size() != 3) throw std::invalid_argument("golden GHW line needs d,r,value");
        GhwCell c;
        c.d = static_cast<int>(to_u64(f[0]));
        c.r = static_cast<int>(to_u64(f[1]));
        const auto dash = f[2].find('-');
        if (dash == std::string::npos) {
            c.lo = c.hi = to_u64(f[2]);
        } else {
            c.lo = to_u64(f[2].substr(0, dash));
            c.hi = to_u64(f[2].substr(dash + 1));
        }
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const GhwCell& a, const GhwCell& b) {
        return std::pair(a.d, a.r) < std::pair(b.d, b.r);
    });
    return out;
}

std::vector<GoodParamsRow> parse_good_params(std::string_view csv) {
    std::vector<GoodParamsRow> out;
    for (const auto& f : data_lines(csv)) {
        if (f.size() != 8) throw std::invalid_argument("golden parameter line needs 8 fields");
        GoodParamsRow r;
        r.q = static_cast<int>(to_u64(f[0]));
        r.s = static_cast<int>(to_u64(f[1]));
        r.m = static_cast<int>(to_u64(f[2]));
        r.lambda = static_cast<int>(to_u64(f[3]));
        if (f[4] != "ssc" && f[4] != "dual") throw std::invalid_argument("kind must be ssc or dual");
        r.dual = f[4] == "dual";
        r.n = to_u64(f[5]);
        r.k = to_u64(f[6]);
        r.d1 = to_u64(f[7]);
        r.status = DistanceStatus::Bound;
        out.push_back(r);
    }
    return out;
}

CheckResult check_ghw_table(const GhwTable& got, const std::vector<GhwCell>& golden) {
    CheckResult res;
    std::map<std::pair<int, int>, GhwCell> want;
    for (const auto& c : golden) want[{c.d, c.r}] = c;
    std::map<std::pair<int, int>, GhwCell> have;
    for (const auto& c : got.cells) have[{c.d, c.r}] = c;
    for (const auto& [key, c] : want) {
        auto it = have.find(key);
        const std::string where = "d=" + std::to_string(key.first) + " r=" + std::to_string(key.second);
        if (it == have.end())
            res.mismatches.push_back(where + ": missing, expected " + c.text());
        else if (!(it->second == c))
            res.mismatches.push_back(where + ": got " + it->second.text() + ", expected " + c.text());
    }
    for (const auto& [key, c] : have)
        if (!want.count(key))
            res.mismatches.push_back("d=" + std::to_string(key.first) + " r=" + std::to_string(key.second) +
                                     ": unexpected cell " + c.text());
    res.pass = res.mismatches.empty();
    return res;
}

CheckResult check_good_params(const std::vector<GoodParamsRow>& got, const std::vector<GoodParamsRow>& golden) {
    CheckResult res;
    if (got.size() != golden.size()) res.mismatches.push_back("row count differs");
    for (std::size_t i = 0; i < std::min(got.size(), golden.size()); ++i) {
        const auto& g = got[i];
        const auto& w = golden[i];
        const std::string where = "row " + std::to_string(i + 1) + " [" + std::to_string(w.n) + "," +
                                  std::to_string(w.k) + "]";
        if (g.n != w.n || g.k != w.k)
            res.mismatches.push_back(where + ": got [" + std::to_string(g.n) + "," + std::to_string(g.k) + "]");
        if (g.status != DistanceStatus::Unknown && g.d1 < w.d1)
            res.mismatches.push_back(where + ": d1 " + std::to_string(g.d1) + " below " + std::to_string(w.d1));
    }
    res.pass = res.mismatches.empty();
    return res;
}

}  // namespace prmkit
