#include "crepair/diff.hpp"

#include <algorithm>
#include <span>

#include <fmt/format.h>

namespace crepair {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
    lines.push_back(text.substr(start, end - start));
    start = end;
  }
  return lines;
}

std::vector<DiffOp> diff_lines(std::span<const std::string_view> a, std::span<const std::string_view> b) {
  const long n = static_cast<long>(a.size());
  const long m = static_cast<long>(b.size());
  const long max = n + m;
  const long offset = max + 1;
  std::vector<long> v(static_cast<std::size_t>(2 * max + 3), 0);
  std::vector<std::vector<long>> trace;
  long d_end = 0;
  for (long d = 0; d <= max; ++d) {
    trace.push_back(v);
    bool done = false;
    for (long k = -d; k <= d; k += 2) {
      long x;
      if (k == -d || (k != d && v[k - 1 + offset] < v[k + 1 + offset])) {
        x = v[k + 1 + offset];
      } else {
        x = v[k - 1 + offset] + 1;
      }
      long y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[k + offset] = x;
      if (x >= n && y >= m) {
        done = true;
        break;
      }
    }
    if (done) {
      d_end = d;
      break;
    }
  }

  std::vector<DiffOp> ops;
  long x = n, y = m;
  for (long d = d_end; d >= 0; --d) {
    const auto& vd = trace[static_cast<std::size_t>(d)];
    long k = x - y;
    long prev_k;
    if (d == 0) {
      prev_k = 0;
    } else if (k == -d || (k != d && vd[k - 1 + offset] < vd[k + 1 + offset])) {
      prev_k = k + 1;
    } else {
      prev_k = k - 1;
    }
    long prev_x = d == 0 ? 0 : vd[prev_k + offset];
    long prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      --x;
      --y;
      ops.push_back({DiffOp::Kind::Equal, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
    }
    if (d > 0) {
      if (x == prev_x) {
        --y;
        ops.push_back({DiffOp::Kind::Insert, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
      } else {
        --x;
        ops.push_back({DiffOp::Kind::Delete, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
      }
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

std::size_t diff_size(std::string_view a, std::string_view b) {
  if (a == b) return 0;
  auto la = split_lines(a);
  auto lb = split_lines(b);
  std::size_t n = 0;
  for (const auto& op : diff_lines(la, lb)) n += op.kind != DiffOp::Kind::Equal;
  return n;
}

namespace {

void append_line(std::string& out, char mark, std::string_view line) {
  out += mark;
  out += line;
  if (line.empty() || line.back() != '\n') out += "\n\\ No newline at end of file\n";
}

std::string range(std::size_t start, std::size_t count) {
  // Empty ranges name the line before them.
  if (count == 0) return fmt::format("{},0", start);
  if (count == 1) return fmt::format("{}", start + 1);
  return fmt::format("{},{}", start + 1, count);
}

}  // namespace

std::string unified_diff(std::string_view a, std::string_view b, std::string_view from_label,
                         std::string_view to_label, int context) {
  if (a == b) return {};
  auto la = split_lines(a);
  auto lb = split_lines(b);
  auto ops = diff_lines(la, lb);
  const std::size_t ctx = static_cast<std::size_t>(std::max(0, context));

  std::string out = fmt::format("--- {}\n+++ {}\n", from_label, to_label);
  std::size_t i = 0;
  while (i < ops.size()) {
    while (i < ops.size() && ops[i].kind == DiffOp::Kind::Equal) ++i;
    if (i == ops.size()) break;
    std::size_t begin = i >= ctx ? i - ctx : 0;
    // Extend the hunk while the next change is within 2 * context lines.
    std::size_t end = i;
    while (true) {
      while (end < ops.size() && ops[end].kind != DiffOp::Kind::Equal) ++end;
      std::size_t next = end;
      while (next < ops.size() && ops[next].kind == DiffOp::Kind::Equal) ++next;
      if (next < ops.size() && next - end <= 2 * ctx) {
        end = next;
        continue;
      }
      end = std::min(ops.size(), end + ctx);
      break;
    }
    std::size_t a_start = ops[begin].a, b_start = ops[begin].b, a_count = 0, b_count = 0;
    std::string body;
    for (std::size_t k = begin; k < end; ++k) {
      const auto& op = ops[k];
      switch (op.kind) {
        case DiffOp::Kind::Equal:
          append_line(body, ' ', la[op.a]);
          ++a_count;
          ++b_count;
          break;
        case DiffOp::Kind::Delete:
          append_line(body, '-', la[op.a]);
          ++a_count;
          break;
        case DiffOp::Kind::Insert:
          append_line(body, '+', lb[op.b]);
          ++b_count;
          break;
      }
    }
    out += fmt::format("@@ -{} +{} @@\n", range(a_start, a_count), range(b_start, b_count));
    out += body;
    i = end;
  }
  return out;
}

}  // namespace crepair
