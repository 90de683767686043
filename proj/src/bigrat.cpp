#include <feuler/bigrat.hpp>

#include <cctype>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace feuler {

std::string to_string(const BigRat &q) { return q.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

BigInt parse_int(std::string_view s)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return BigInt(std::string(s), 10);
}

} // namespace

BigRat parse_bigrat(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return BigRat(parse_int(num));
    }
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    BigInt d = parse_int(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    BigRat q(parse_int(num), d);
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

const BigInt &binomial(unsigned n, unsigned k)
{
    // Rows are never moved once appended (deque), so references stay valid.
    static std::mutex mutex;
    static std::deque<std::vector<BigInt>> rows;
    static const BigInt zero(0);

    if (k > n) {
        return zero;
    }
    std::lock_guard lock(mutex);
    while (rows.size() <= n) {
        const auto m = rows.size();
        std::vector<BigInt> row(m + 1, BigInt(1));
        for (std::size_t i = 1; i < m; ++i) {
            row[i] = rows[m - 1][i - 1] + rows[m - 1][i];
        }
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

} // namespace feuler
