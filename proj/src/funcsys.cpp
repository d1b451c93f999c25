#include "indep/funcsys.hpp"

#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace indep {

std::string Point::key() const {
    std::string k = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) k += ",";
        k += coords[i].repr();
    }
    k += ")";
    return k;
}

Point make_point(Scalar coord, std::string label) {
    Point p;
    p.coords.push_back(std::move(coord));
    p.label = std::move(label);
    if (p.label.empty()) p.label = p.coords[0].repr();
    return p;
}

Point make_point(std::vector<Scalar> coords, std::string label) {
    Point p;
    p.coords = std::move(coords);
    p.label = std::move(label);
    if (p.label.empty()) p.label = p.key();
    return p;
}

CandidatePool::CandidatePool(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) throw EmptyPool();
    std::unordered_set<std::string> seen;
    for (const Point& p : points_) {
        if (p.coords.empty()) throw Error("pool point with no coordinates");
        if (!seen.insert(p.key()).second)
            throw Error("duplicate pool point " + p.label);
    }
}

CandidatePool CandidatePool::grid(const Scalar& start, const Scalar& step, std::size_t count,
                                  const FieldDescriptor& fd) {
    if (count == 0) throw EmptyPool();
    std::vector<Point> pts;
    pts.reserve(count);
    Scalar v = start;
    for (std::size_t i = 0; i < count; ++i) {
        pts.push_back(make_point(v, scalar_to_string(v, fd)));
        v = add(v, step, fd);
    }
    return CandidatePool(std::move(pts));
}

namespace {

// splitmix64: stable across platforms, unlike <random> distributions.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d4a2415792d45ULL;
        return z ^ (z >> 31);
    }
    std::int64_t bounded(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }
};

} // namespace

CandidatePool CandidatePool::random_integers(std::uint64_t seed, std::size_t count,
                                             std::int64_t lo, std::int64_t hi,
                                             const FieldDescriptor& fd) {
    if (count == 0) throw EmptyPool();
    if (lo > hi) throw Error("random pool range is empty");
    SplitMix64 rng{seed};
    std::vector<Point> pts;
    std::unordered_set<std::string> seen;
    std::size_t attempts = 0;
    const std::size_t max_attempts = 1000 * count + 1000;
    while (pts.size() < count) {
        if (++attempts > max_attempts)
            throw Error("could not draw " + std::to_string(count) +
                        " distinct pool points from the given range");
        Scalar v = from_integer(rng.bounded(lo, hi), fd);
        Point p = make_point(v, scalar_to_string(v, fd));
        if (seen.insert(p.key()).second) pts.push_back(std::move(p));
    }
    return CandidatePool(std::move(pts));
}

struct FunctionHandle::State {
    std::string name;
    std::function<Scalar(const Point&)> fn;
    mutable std::mutex mutex;
    mutable std::unordered_map<std::string, Scalar> memo;
};

FunctionHandle::FunctionHandle(std::string name, std::function<Scalar(const Point&)> fn)
    : state_(std::make_shared<State>()) {
    state_->name = std::move(name);
    state_->fn = std::move(fn);
}

const std::string& FunctionHandle::name() const { return state_->name; }

Scalar FunctionHandle::operator()(const Point& p) const {
    const std::string k = p.key();
    {
        std::lock_guard<std::mutex> lock(state_->mutex);
        auto it = state_->memo.find(k);
        if (it != state_->memo.end()) return it->second;
    }
    Scalar v = state_->fn(p);
    std::lock_guard<std::mutex> lock(state_->mutex);
    return state_->memo.emplace(k, std::move(v)).first->second;
}

FunctionHandle tabulated_handle(std::string name,
                                const std::vector<std::pair<Point, Scalar>>& table) {
    auto values = std::make_shared<std::map<std::string, Scalar>>();
    for (const auto& [pt, val] : table) (*values)[pt.key()] = val;
    return FunctionHandle(std::move(name), [values](const Point& p) -> Scalar {
        auto it = values->find(p.key());
        if (it == values->end())
            throw Error("point " + p.label + " is not tabulated");
        return it->second;
    });
}

FunctionHandle linear_combination(std::string name,
                                  std::vector<std::pair<Scalar, FunctionHandle>> terms,
                                  const FieldDescriptor& fd) {
    auto held = std::make_shared<std::vector<std::pair<Scalar, FunctionHandle>>>(std::move(terms));
    return FunctionHandle(std::move(name), [held, fd](const Point& p) -> Scalar {
        Scalar acc = zero(fd);
        for (const auto& [c, fn] : *held) acc = add(acc, mul(c, fn(p), fd), fd);
        return acc;
    });
}

FunctionHandle constant_handle(std::string name, const Scalar& value) {
    return FunctionHandle(std::move(name), [value](const Point&) { return value; });
}

FunctionColumn::FunctionColumn(std::vector<FunctionHandle> fns, FieldDescriptor fd)
    : fns_(std::move(fns)), fd_(fd) {
    if (fns_.empty()) throw Error("function column must contain at least one function");
}

FunctionColumn FunctionColumn::head_removed() const {
    return FunctionColumn(std::vector<FunctionHandle>(fns_.begin() + 1, fns_.end()), fd_);
}

FunctionColumn FunctionColumn::subsystem(const std::vector<std::size_t>& idx) const {
    std::vector<FunctionHandle> sub;
    sub.reserve(idx.size());
    for (std::size_t i : idx) {
        if (i >= fns_.size()) throw DimensionMismatch("subsystem index out of range");
        sub.push_back(fns_[i]);
    }
    return FunctionColumn(std::move(sub), fd_);
}

FunctionColumn FunctionColumn::appended(const FunctionHandle& fn) const {
    std::vector<FunctionHandle> fns = fns_;
    fns.push_back(fn);
    return FunctionColumn(std::move(fns), fd_);
}

SampleMatrix sample_matrix(const FunctionColumn& col, const PointTuple& pts) {
    const std::size_t n = col.size(), k = pts.size();
    SampleMatrix sm;
    sm.values = Matrix(n, k, zero(col.field()));
    sm.points = pts;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            try {
                sm.values(i, j) = col[i](pts[j]);
            } catch (const std::exception& e) {
                throw EvaluationFailure(i, j, e.what());
            }
        }
    }
    return sm;
}

FunctionColumn apply_transform(const Matrix& a, const FunctionColumn& col) {
    const std::size_t n = col.size();
    if (a.rows() != n || a.cols() != n)
        throw DimensionMismatch("transform must be " + std::to_string(n) + "x" +
                                std::to_string(n) + ", got " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()));
    const FieldDescriptor fd = col.field();
    std::vector<FunctionHandle> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<Scalar, FunctionHandle>> terms;
        for (std::size_t j = 0; j < n; ++j) {
            if (fd.is_exact() && is_effectively_zero(a(i, j), 0.0, fd)) continue;
            terms.emplace_back(a(i, j), col[j]);
        }
        if (terms.empty()) {
            out.push_back(constant_handle("0", zero(fd)));
        } else {
            out.push_back(linear_combination("(A*f)" + std::to_string(i + 1),
                                             std::move(terms), fd));
        }
    }
    return FunctionColumn(std::move(out), fd);
}

bool SampleMatrix::recheck(const FunctionColumn& col) const {
    if (values.rows() != col.size() || values.cols() != points.size()) return false;
    const FieldDescriptor& fd = col.field();
    for (std::size_t i = 0; i < values.rows(); ++i)
        for (std::size_t j = 0; j < values.cols(); ++j)
            if (!scalar_equal(values(i, j), col[i](points[j]), fd)) return false;
    return true;
}

} // namespace indep
