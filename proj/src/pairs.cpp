#include "sympair/pairs.hpp"

#include <future>

namespace sympair {

PairSpec make_pair(RootSystemPtr rs, InvolutionSpec theta, std::string label) {
  if (theta.rs_ptr().get() != rs.get())
    throw PreconditionError("pair involution was built for a different root system");
  return PairSpec{std::move(rs), std::move(theta), std::move(label)};
}

PairSpec galois_split_pair(RootSystemPtr rs) {
  InvolutionSpec theta = InvolutionSpec::galois_split(rs);
  return make_pair(std::move(rs), std::move(theta), "galois-split");
}

static StarRow star_row(const RootSystem& rs, TwistedInvolution w) {
  StarRow row{std::move(w), {}, {}, {}, zero_weight(rs.ambient_dim()), false};
  for (int idx = 0; idx < rs.positive_count(); ++idx) {
    const int img = row.w.composite_root(idx);
    if (img == idx) {
      row.s2.push_back(idx);
    } else if (rs.is_positive(img)) {
      row.s1.push_back(idx);
    } else {
      row.s3.push_back(idx);
      row.s3_sum = wadd(row.s3_sum, wadd(rs.root(idx), rs.root(img)));
    }
  }
  row.holds = is_zero_vec(row.s3_sum);
  return row;
}

StarReport verify_star(const PairSpec& pair, const WeylGroup& group, int workers) {
  const auto twisted = twisted_involutions(group, pair.theta);
  StarReport report;
  report.rows.reserve(twisted.size());

  if (workers <= 1 || twisted.size() < 2) {
    for (const auto& w : twisted) report.rows.push_back(star_row(*pair.rs, w));
  } else {
    const size_t n = twisted.size();
    const size_t nw = std::min<size_t>(static_cast<size_t>(workers), n);
    std::vector<std::future<std::vector<StarRow>>> futs;
    for (size_t k = 0; k < nw; ++k) {
      futs.push_back(std::async(std::launch::async, [&, k]() {
        std::vector<StarRow> rows;
        for (size_t i = k; i < n; i += nw) rows.push_back(star_row(*pair.rs, twisted[i]));
        return rows;
      }));
    }
    std::vector<std::vector<StarRow>> chunks;
    for (auto& f : futs) chunks.push_back(f.get());
    for (size_t i = 0; i < n; ++i)
      report.rows.push_back(std::move(chunks[i % nw][i / nw]));
  }

  for (const auto& row : report.rows)
    if (!row.holds) report.all_hold = false;
  return report;
}

} // namespace sympair
