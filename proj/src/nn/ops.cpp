#include "gsc/nn/ops.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <limits>

namespace gsc::nn {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const RowMat>;
using MutMap = Eigen::Map<RowMat>;

using NodePtr = std::shared_ptr<detail::Node>;

ConstMap cmap(const Buffer& v, std::size_t r, std::size_t c) {
  return ConstMap(v.data(), static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
}

MutMap mmap(std::span<double> v, std::size_t r, std::size_t c) {
  return MutMap(v.data(), static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
}

[[noreturn]] void mismatch(const char* op, const Tensor& a, const Tensor& b) {
  throw ShapeError(std::string(op) + ": incompatible shapes " + shape_string(a.shape()) + " and " +
                   shape_string(b.shape()));
}

void require_defined(const char* op, const Tensor& t) {
  if (!t.defined()) throw ShapeError(std::string(op) + ": undefined operand");
}

void require_same(const char* op, const Tensor& a, const Tensor& b) {
  require_defined(op, a);
  require_defined(op, b);
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.size() != b.size()) mismatch(op, a, b);
}

Shape mat(std::size_t r, std::size_t c) { return Shape{r, c}; }

template <typename F, typename D>
Tensor unary(const Tensor& x, F f, D dfdx_from_y) {
  require_defined("unary", x);
  const auto& xv = x.node()->value;
  Buffer out(xv.size());
  for (std::size_t i = 0; i < xv.size(); ++i) out[i] = f(xv[i]);
  NodePtr hx = x.handle();
  return detail::record(x.shape(), std::move(out), {&x}, [hx, dfdx_from_y](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto gx = hx->grad_buffer();
    for (std::size_t i = 0; i < gx.size(); ++i) {
      gx[i] += self.grad[i] * dfdx_from_y(hx->value[i], self.value[i]);
    }
  });
}

}  // namespace

Tensor matmul(const Tensor& a, const Tensor& b) {
  require_defined("matmul", a);
  require_defined("matmul", b);
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  if (b.rows() != k) mismatch("matmul", a, b);
  Buffer out(n * m);
  mmap(out, n, m).noalias() = cmap(a.node()->value, n, k) * cmap(b.node()->value, k, m);
  NodePtr ha = a.handle(), hb = b.handle();
  return detail::record(mat(n, m), std::move(out), {&a, &b}, [ha, hb, n, k, m](detail::Node& self) {
    auto g = cmap(self.grad, n, m);
    if (ha->requires_grad) mmap(ha->grad_buffer(), n, k).noalias() += g * cmap(hb->value, k, m).transpose();
    if (hb->requires_grad) mmap(hb->grad_buffer(), k, m).noalias() += cmap(ha->value, n, k).transpose() * g;
  });
}

Tensor transpose(const Tensor& a) {
  require_defined("transpose", a);
  const std::size_t n = a.rows(), m = a.cols();
  Buffer out(n * m);
  mmap(out, m, n) = cmap(a.node()->value, n, m).transpose();
  NodePtr ha = a.handle();
  return detail::record(mat(m, n), std::move(out), {&a}, [ha, n, m](detail::Node& self) {
    if (ha->requires_grad) mmap(ha->grad_buffer(), n, m) += cmap(self.grad, m, n).transpose();
  });
}

Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b) {
  require_defined("linear", x);
  require_defined("linear", w);
  const std::size_t n = x.rows(), in = x.cols(), out_dim = w.rows();
  if (w.cols() != in) mismatch("linear", x, w);
  if (b.defined() && b.size() != out_dim) mismatch("linear", w, b);
  Buffer out(n * out_dim);
  auto y = mmap(out, n, out_dim);
  y.noalias() = cmap(x.node()->value, n, in) * cmap(w.node()->value, out_dim, in).transpose();
  if (b.defined()) y.rowwise() += cmap(b.node()->value, 1, out_dim).row(0);
  NodePtr hx = x.handle(), hw = w.handle(), hb = b.handle();
  return detail::record(mat(n, out_dim), std::move(out), {&x, &w, &b},
                        [hx, hw, hb, n, in, out_dim](detail::Node& self) {
                          auto g = cmap(self.grad, n, out_dim);
                          if (hx->requires_grad) {
                            mmap(hx->grad_buffer(), n, in).noalias() += g * cmap(hw->value, out_dim, in);
                          }
                          if (hw->requires_grad) {
                            mmap(hw->grad_buffer(), out_dim, in).noalias() +=
                                g.transpose() * cmap(hx->value, n, in);
                          }
                          if (hb && hb->requires_grad) {
                            mmap(hb->grad_buffer(), 1, out_dim) += g.colwise().sum();
                          }
                        });
}

Tensor add(const Tensor& a, const Tensor& b) {
  require_same("add", a, b);
  const auto& av = a.node()->value;
  const auto& bv = b.node()->value;
  Buffer out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] + bv[i];
  NodePtr ha = a.handle(), hb = b.handle();
  return detail::record(a.shape(), std::move(out), {&a, &b}, [ha, hb](detail::Node& self) {
    for (const NodePtr& h : {ha, hb}) {
      if (!h->requires_grad) continue;
      auto g = h->grad_buffer();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i];
    }
  });
}

Tensor sub(const Tensor& a, const Tensor& b) {
  require_same("sub", a, b);
  const auto& av = a.node()->value;
  const auto& bv = b.node()->value;
  Buffer out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] - bv[i];
  NodePtr ha = a.handle(), hb = b.handle();
  return detail::record(a.shape(), std::move(out), {&a, &b}, [ha, hb](detail::Node& self) {
    if (ha->requires_grad) {
      auto g = ha->grad_buffer();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i];
    }
    if (hb->requires_grad) {
      auto g = hb->grad_buffer();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] -= self.grad[i];
    }
  });
}

Tensor mul(const Tensor& a, const Tensor& b) {
  require_same("mul", a, b);
  const auto& av = a.node()->value;
  const auto& bv = b.node()->value;
  Buffer out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] * bv[i];
  NodePtr ha = a.handle(), hb = b.handle();
  return detail::record(a.shape(), std::move(out), {&a, &b}, [ha, hb](detail::Node& self) {
    if (ha->requires_grad) {
      auto g = ha->grad_buffer();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i] * hb->value[i];
    }
    if (hb->requires_grad) {
      auto g = hb->grad_buffer();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i] * ha->value[i];
    }
  });
}

Tensor add_row(const Tensor& x, const Tensor& row) {
  require_defined("add_row", x);
  require_defined("add_row", row);
  const std::size_t n = x.rows(), m = x.cols();
  if (row.size() != m) mismatch("add_row", x, row);
  Buffer out(x.node()->value);
  mmap(out, n, m).rowwise() += cmap(row.node()->value, 1, m).row(0);
  NodePtr hx = x.handle(), hr = row.handle();
  return detail::record(mat(n, m), std::move(out), {&x, &row}, [hx, hr, n, m](detail::Node& self) {
    if (hx->requires_grad) {
      auto g = hx->grad_buffer();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i];
    }
    if (hr->requires_grad) mmap(hr->grad_buffer(), 1, m) += cmap(self.grad, n, m).colwise().sum();
  });
}

Tensor scale(const Tensor& x, double factor) {
  return unary(
      x, [factor](double v) { return v * factor; }, [factor](double, double) { return factor; });
}

Tensor scale_by(const Tensor& x, const Tensor& s) {
  require_defined("scale_by", x);
  require_defined("scale_by", s);
  if (s.size() != 1) mismatch("scale_by", x, s);
  const double f = s.item();
  Buffer out(x.node()->value);
  for (double& v : out) v *= f;
  NodePtr hx = x.handle(), hs = s.handle();
  return detail::record(x.shape(), std::move(out), {&x, &s}, [hx, hs](detail::Node& self) {
    const double f = hs->value[0];
    if (hx->requires_grad) {
      auto g = hx->grad_buffer();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i] * f;
    }
    if (hs->requires_grad) {
      double acc = 0.0;
      for (std::size_t i = 0; i < self.grad.size(); ++i) acc += self.grad[i] * hx->value[i];
      hs->grad_buffer()[0] += acc;
    }
  });
}

Tensor one_minus(const Tensor& x) {
  return unary(
      x, [](double v) { return 1.0 - v; }, [](double, double) { return -1.0; });
}

Tensor sigmoid(const Tensor& x) {
  return unary(
      x,
      [](double v) {
        if (v >= 0) return 1.0 / (1.0 + std::exp(-v));
        const double e = std::exp(v);
        return e / (1.0 + e);
      },
      [](double, double y) { return y * (1.0 - y); });
}

Tensor tanh(const Tensor& x) {
  return unary(
      x, [](double v) { return std::tanh(v); }, [](double, double y) { return 1.0 - y * y; });
}

Tensor relu(const Tensor& x) {
  return unary(
      x, [](double v) { return v < 0 ? 0.0 : v; }, [](double v, double) { return v > 0 ? 1.0 : 0.0; });
}

Tensor exp(const Tensor& x) {
  return unary(
      x, [](double v) { return std::exp(v); }, [](double, double y) { return y; });
}

Tensor log(const Tensor& x) {
  return unary(
      x, [](double v) { return std::log(v); }, [](double v, double) { return 1.0 / v; });
}

Tensor softmax_rows(const Tensor& x) {
  require_defined("softmax_rows", x);
  const std::size_t n = x.rows(), m = x.cols();
  const auto& xv = x.node()->value;
  Buffer out(xv.size());
  for (std::size_t r = 0; r < n; ++r) {
    const double* in = xv.data() + r * m;
    double* o = out.data() + r * m;
    const double mx = *std::max_element(in, in + m);
    double total = 0.0;
    for (std::size_t c = 0; c < m; ++c) total += (o[c] = std::exp(in[c] - mx));
    for (std::size_t c = 0; c < m; ++c) o[c] /= total;
  }
  NodePtr hx = x.handle();
  return detail::record(x.shape(), std::move(out), {&x}, [hx, n, m](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto gx = hx->grad_buffer();
    for (std::size_t r = 0; r < n; ++r) {
      const double* y = self.value.data() + r * m;
      const double* g = self.grad.data() + r * m;
      double dot = 0.0;
      for (std::size_t c = 0; c < m; ++c) dot += g[c] * y[c];
      for (std::size_t c = 0; c < m; ++c) gx[r * m + c] += y[c] * (g[c] - dot);
    }
  });
}

Tensor log_softmax_rows(const Tensor& x) {
  require_defined("log_softmax_rows", x);
  const std::size_t n = x.rows(), m = x.cols();
  const auto& xv = x.node()->value;
  Buffer out(xv.size());
  for (std::size_t r = 0; r < n; ++r) {
    const double* in = xv.data() + r * m;
    double* o = out.data() + r * m;
    const double mx = *std::max_element(in, in + m);
    double total = 0.0;
    for (std::size_t c = 0; c < m; ++c) total += std::exp(in[c] - mx);
    const double lse = mx + std::log(total);
    for (std::size_t c = 0; c < m; ++c) o[c] = in[c] - lse;
  }
  NodePtr hx = x.handle();
  return detail::record(x.shape(), std::move(out), {&x}, [hx, n, m](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto gx = hx->grad_buffer();
    for (std::size_t r = 0; r < n; ++r) {
      const double* y = self.value.data() + r * m;
      const double* g = self.grad.data() + r * m;
      double total = 0.0;
      for (std::size_t c = 0; c < m; ++c) total += g[c];
      for (std::size_t c = 0; c < m; ++c) gx[r * m + c] += g[c] - std::exp(y[c]) * total;
    }
  });
}

Tensor concat_cols(const std::vector<Tensor>& parts) {
  if (parts.empty()) throw ShapeError("concat_cols: no operands");
  const std::size_t n = parts.front().rows();
  std::vector<std::size_t> widths;
  std::size_t total = 0;
  for (const Tensor& p : parts) {
    require_defined("concat_cols", p);
    if (p.rows() != n) mismatch("concat_cols", parts.front(), p);
    widths.push_back(p.cols());
    total += p.cols();
  }
  Buffer out(n * total);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& v = parts[i].node()->value;
    for (std::size_t r = 0; r < n; ++r) {
      std::copy_n(v.data() + r * widths[i], widths[i], out.data() + r * total + offset);
    }
    offset += widths[i];
  }
  std::vector<NodePtr> handles;
  for (const Tensor& p : parts) handles.push_back(p.handle());
  bool needs = false;
  for (const Tensor& p : parts) needs = needs || p.requires_grad();
  return detail::record(mat(n, total), std::move(out), needs,
                        [handles, widths, n, total](detail::Node& self) {
                          std::size_t offset = 0;
                          for (std::size_t i = 0; i < handles.size(); ++i) {
                            if (handles[i]->requires_grad) {
                              auto g = handles[i]->grad_buffer();
                              for (std::size_t r = 0; r < n; ++r) {
                                for (std::size_t c = 0; c < widths[i]; ++c) {
                                  g[r * widths[i] + c] += self.grad[r * total + offset + c];
                                }
                              }
                            }
                            offset += widths[i];
                          }
                        });
}

Tensor concat_rows(const std::vector<Tensor>& parts) {
  if (parts.empty()) throw ShapeError("concat_rows: no operands");
  const std::size_t m = parts.front().cols();
  std::size_t total_rows = 0;
  Buffer out;
  for (const Tensor& p : parts) {
    require_defined("concat_rows", p);
    if (p.cols() != m) mismatch("concat_rows", parts.front(), p);
    total_rows += p.rows();
    out.insert(out.end(), p.node()->value.begin(), p.node()->value.end());
  }
  std::vector<NodePtr> handles;
  bool needs = false;
  for (const Tensor& p : parts) {
    handles.push_back(p.handle());
    needs = needs || p.requires_grad();
  }
  return detail::record(mat(total_rows, m), std::move(out), needs, [handles](detail::Node& self) {
    std::size_t offset = 0;
    for (const NodePtr& h : handles) {
      const std::size_t len = h->value.size();
      if (h->requires_grad) {
        auto g = h->grad_buffer();
        for (std::size_t i = 0; i < len; ++i) g[i] += self.grad[offset + i];
      }
      offset += len;
    }
  });
}

Tensor slice_cols(const Tensor& x, std::size_t begin, std::size_t end) {
  require_defined("slice_cols", x);
  const std::size_t n = x.rows(), m = x.cols();
  if (begin > end || end > m) {
    throw ShapeError("slice_cols: range [" + std::to_string(begin) + ", " + std::to_string(end) +
                     ") out of bounds for shape " + shape_string(x.shape()));
  }
  const std::size_t w = end - begin;
  Buffer out(n * w);
  const auto& xv = x.node()->value;
  for (std::size_t r = 0; r < n; ++r) std::copy_n(xv.data() + r * m + begin, w, out.data() + r * w);
  NodePtr hx = x.handle();
  return detail::record(mat(n, w), std::move(out), {&x}, [hx, n, m, w, begin](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < w; ++c) g[r * m + begin + c] += self.grad[r * w + c];
    }
  });
}

Tensor slice_rows(const Tensor& x, std::size_t begin, std::size_t end) {
  require_defined("slice_rows", x);
  const std::size_t n = x.rows(), m = x.cols();
  if (begin > end || end > n) {
    throw ShapeError("slice_rows: range out of bounds for shape " + shape_string(x.shape()));
  }
  const auto& xv = x.node()->value;
  Buffer out(xv.begin() + static_cast<std::ptrdiff_t>(begin * m),
                          xv.begin() + static_cast<std::ptrdiff_t>(end * m));
  NodePtr hx = x.handle();
  return detail::record(mat(end - begin, m), std::move(out), {&x}, [hx, begin, m](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    for (std::size_t i = 0; i < self.grad.size(); ++i) g[begin * m + i] += self.grad[i];
  });
}

Tensor reshape(const Tensor& x, Shape shape) {
  require_defined("reshape", x);
  if (shape_size(shape) != x.size()) {
    throw ShapeError("reshape: cannot view " + shape_string(x.shape()) + " as " + shape_string(shape));
  }
  NodePtr hx = x.handle();
  return detail::record(std::move(shape), x.node()->value, {&x}, [hx](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i];
  });
}

Tensor sum(const Tensor& x) {
  require_defined("sum", x);
  double total = 0.0;
  for (double v : x.node()->value) total += v;
  NodePtr hx = x.handle();
  return detail::record(Shape{}, {total}, {&x}, [hx](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    for (double& v : g) v += self.grad[0];
  });
}

Tensor mean(const Tensor& x) {
  require_defined("mean", x);
  if (x.size() == 0) throw ShapeError("mean: empty tensor");
  return scale(sum(x), 1.0 / static_cast<double>(x.size()));
}

Tensor mean_rows(const Tensor& x) {
  require_defined("mean_rows", x);
  const std::size_t n = x.rows(), m = x.cols();
  if (n == 0) throw ShapeError("mean_rows: no rows");
  Buffer out(m);
  mmap(out, 1, m) = cmap(x.node()->value, n, m).colwise().mean();
  NodePtr hx = x.handle();
  return detail::record(mat(1, m), std::move(out), {&x}, [hx, n, m](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < m; ++c) g[r * m + c] += self.grad[c] * inv;
    }
  });
}

Tensor max_rows(const Tensor& x) {
  require_defined("max_rows", x);
  const std::size_t n = x.rows(), m = x.cols();
  if (n == 0) throw ShapeError("max_rows: no rows");
  const auto& xv = x.node()->value;
  Buffer out(m, -std::numeric_limits<double>::infinity());
  std::vector<std::size_t> arg(m, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const double v = xv[r * m + c];
      if (v > out[c] || (std::isnan(v) && !std::isnan(out[c]))) {
        out[c] = v;
        arg[c] = r;
      }
    }
  }
  NodePtr hx = x.handle();
  return detail::record(mat(1, m), std::move(out), {&x}, [hx, arg, m](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    for (std::size_t c = 0; c < m; ++c) g[arg[c] * m + c] += self.grad[c];
  });
}

Tensor gather_rows(const Tensor& x, std::span<const std::size_t> index) {
  require_defined("gather_rows", x);
  const std::size_t n = x.rows(), m = x.cols();
  Buffer out(index.size() * m);
  const auto& xv = x.node()->value;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= n) {
      throw ShapeError("gather_rows: row " + std::to_string(index[i]) + " out of range for shape " +
                       shape_string(x.shape()));
    }
    std::copy_n(xv.data() + index[i] * m, m, out.data() + i * m);
  }
  NodePtr hx = x.handle();
  std::vector<std::size_t> idx(index.begin(), index.end());
  return detail::record(mat(idx.size(), m), std::move(out), {&x}, [hx, idx, m](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    for (std::size_t i = 0; i < idx.size(); ++i) {
      double* dst = g.data() + idx[i] * m;
      const double* src = self.grad.data() + i * m;
      for (std::size_t c = 0; c < m; ++c) dst[c] += src[c];
    }
  });
}

Tensor scatter_add_rows(const Tensor& x, std::span<const std::size_t> index, std::size_t rows) {
  require_defined("scatter_add_rows", x);
  const std::size_t m = x.cols();
  if (index.size() != x.rows()) {
    throw ShapeError("scatter_add_rows: " + std::to_string(index.size()) + " indices for shape " +
                     shape_string(x.shape()));
  }
  Buffer out(rows * m, 0.0);
  const auto& xv = x.node()->value;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= rows) throw ShapeError("scatter_add_rows: target row out of range");
    double* dst = out.data() + index[i] * m;
    const double* src = xv.data() + i * m;
    for (std::size_t c = 0; c < m; ++c) dst[c] += src[c];
  }
  NodePtr hx = x.handle();
  std::vector<std::size_t> idx(index.begin(), index.end());
  return detail::record(mat(rows, m), std::move(out), {&x}, [hx, idx, m](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const double* src = self.grad.data() + idx[i] * m;
      double* dst = g.data() + i * m;
      for (std::size_t c = 0; c < m; ++c) dst[c] += src[c];
    }
  });
}

Tensor scale_rows(const Tensor& x, std::span<const double> weights) {
  require_defined("scale_rows", x);
  const std::size_t n = x.rows(), m = x.cols();
  if (weights.size() != n) throw ShapeError("scale_rows: weight count does not match " + shape_string(x.shape()));
  Buffer out(x.node()->value);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) out[r * m + c] *= weights[r];
  }
  NodePtr hx = x.handle();
  Buffer w(weights.begin(), weights.end());
  return detail::record(x.shape(), std::move(out), {&x}, [hx, w, m](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    for (std::size_t r = 0; r < w.size(); ++r) {
      for (std::size_t c = 0; c < m; ++c) g[r * m + c] += self.grad[r * m + c] * w[r];
    }
  });
}

Tensor pick(const Tensor& x, std::span<const std::size_t> flat_index) {
  require_defined("pick", x);
  Buffer out(flat_index.size());
  const auto& xv = x.node()->value;
  for (std::size_t i = 0; i < flat_index.size(); ++i) {
    if (flat_index[i] >= xv.size()) throw ShapeError("pick: index out of range for " + shape_string(x.shape()));
    out[i] = xv[flat_index[i]];
  }
  NodePtr hx = x.handle();
  std::vector<std::size_t> idx(flat_index.begin(), flat_index.end());
  return detail::record(mat(1, idx.size()), std::move(out), {&x}, [hx, idx](detail::Node& self) {
    if (!hx->requires_grad) return;
    auto g = hx->grad_buffer();
    for (std::size_t i = 0; i < idx.size(); ++i) g[idx[i]] += self.grad[i];
  });
}

Tensor conv1d(const Tensor& x, const Tensor& w, const Tensor& b, std::size_t kernel, std::size_t padding) {
  require_defined("conv1d", x);
  require_defined("conv1d", w);
  require_defined("conv1d", b);
  const std::size_t len = x.rows(), in = x.cols(), out_ch = w.rows();
  if (w.cols() != kernel * in) mismatch("conv1d", x, w);
  if (b.size() != out_ch) mismatch("conv1d", w, b);
  if (len + 2 * padding < kernel) {
    throw ShapeError("conv1d: sequence of shape " + shape_string(x.shape()) + " shorter than kernel");
  }
  const std::size_t out_len = len + 2 * padding - kernel + 1;
  // im2col: each output position becomes a row of kernel*in inputs.
  Buffer cols(out_len * kernel * in, 0.0);
  const auto& xv = x.node()->value;
  for (std::size_t p = 0; p < out_len; ++p) {
    for (std::size_t k = 0; k < kernel; ++k) {
      const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(p + k) - static_cast<std::ptrdiff_t>(padding);
      if (src < 0 || src >= static_cast<std::ptrdiff_t>(len)) continue;
      std::copy_n(xv.data() + static_cast<std::size_t>(src) * in, in, cols.data() + (p * kernel + k) * in);
    }
  }
  Buffer out(out_len * out_ch);
  auto y = mmap(out, out_len, out_ch);
  y.noalias() = cmap(cols, out_len, kernel * in) * cmap(w.node()->value, out_ch, kernel * in).transpose();
  y.rowwise() += cmap(b.node()->value, 1, out_ch).row(0);
  NodePtr hx = x.handle(), hw = w.handle(), hb = b.handle();
  return detail::record(
      mat(out_len, out_ch), std::move(out), {&x, &w, &b},
      [hx, hw, hb, cols = std::move(cols), len, in, out_ch, out_len, kernel, padding](detail::Node& self) {
        auto g = cmap(self.grad, out_len, out_ch);
        if (hw->requires_grad) {
          mmap(hw->grad_buffer(), out_ch, kernel * in).noalias() += g.transpose() * cmap(cols, out_len, kernel * in);
        }
        if (hb->requires_grad) mmap(hb->grad_buffer(), 1, out_ch) += g.colwise().sum();
        if (hx->requires_grad) {
          RowMat dcols = g * cmap(hw->value, out_ch, kernel * in);
          auto gx = hx->grad_buffer();
          for (std::size_t p = 0; p < out_len; ++p) {
            for (std::size_t k = 0; k < kernel; ++k) {
              const std::ptrdiff_t src =
                  static_cast<std::ptrdiff_t>(p + k) - static_cast<std::ptrdiff_t>(padding);
              if (src < 0 || src >= static_cast<std::ptrdiff_t>(len)) continue;
              for (std::size_t c = 0; c < in; ++c) {
                gx[static_cast<std::size_t>(src) * in + c] +=
                    dcols(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(k * in + c));
              }
            }
          }
        }
      });
}

Tensor binary_cross_entropy(const Tensor& probs, std::span<const double> labels) {
  require_defined("binary_cross_entropy", probs);
  if (labels.size() != probs.size() || probs.size() == 0) {
    throw ShapeError("binary_cross_entropy: " + std::to_string(labels.size()) + " labels for shape " +
                     shape_string(probs.shape()));
  }
  constexpr double kClip = 1e-7;
  const auto& pv = probs.node()->value;
  const std::size_t n = pv.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pv[i] < 0.0 || pv[i] > 1.0) {
      throw std::domain_error("binary_cross_entropy: probability " + std::to_string(pv[i]) + " outside [0, 1]");
    }
    const double p = std::clamp(pv[i], kClip, 1.0 - kClip);
    total -= labels[i] * std::log(p) + (1.0 - labels[i]) * std::log(1.0 - p);
  }
  NodePtr hp = probs.handle();
  Buffer y(labels.begin(), labels.end());
  return detail::record(Shape{}, {total / static_cast<double>(n)}, {&probs}, [hp, y](detail::Node& self) {
    if (!hp->requires_grad) return;
    auto g = hp->grad_buffer();
    const double scale_factor = self.grad[0] / static_cast<double>(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double raw = hp->value[i];
      if (raw < kClip || raw > 1.0 - kClip) continue;
      g[i] += scale_factor * (-(y[i] / raw) + (1.0 - y[i]) / (1.0 - raw));
    }
  });
}

}  // namespace gsc::nn
