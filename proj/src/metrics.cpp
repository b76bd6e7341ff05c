#include "seedstop/metrics.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "seedstop/errors.hpp"

namespace seedstop {

ConfusionCounts confusion_counts(std::span<const int> labels,
                                 std::span<const int> predictions) {
  if (labels.size() != predictions.size()) {
    std::ostringstream os;
    os << "got " << labels.size() << " labels but " << predictions.size()
       << " predictions";
    raise(Errc::length_mismatch, os.str());
  }
  if (labels.empty()) raise(Errc::empty_input, "no labeled examples");

  ConfusionCounts c;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int y = labels[i], yhat = predictions[i];
    if ((y != 0 && y != 1) || (yhat != 0 && yhat != 1)) {
      std::ostringstream os;
      os << "example " << i << " is not binary (label " << y
         << ", prediction " << yhat << ")";
      raise(Errc::invalid_argument, os.str());
    }
    if (y == 1 && yhat == 1) ++c.tp;
    else if (y == 0 && yhat == 0) ++c.tn;
    else if (y == 0) ++c.fp;
    else ++c.fn;
  }
  return c;
}

double metric_value(MetricKind kind, const ConfusionCounts& c) {
  if (c.total() == 0) raise(Errc::empty_input, "empty confusion counts");
  const double tp = static_cast<double>(c.tp);
  const double tn = static_cast<double>(c.tn);
  const double fp = static_cast<double>(c.fp);
  const double fn = static_cast<double>(c.fn);

  const double accuracy = (tp + tn) / static_cast<double>(c.total());
  const double f1_den = 2.0 * tp + fp + fn;
  const double f1 = f1_den == 0.0 ? 0.0 : 2.0 * tp / f1_den;

  switch (kind) {
    case MetricKind::accuracy:
      return accuracy;
    case MetricKind::f1:
      return f1;
    case MetricKind::acc_f1_mean:
      return 0.5 * (accuracy + f1);
    case MetricKind::mcc: {
      const double den =
          (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
      return den == 0.0 ? 0.0 : (tp * tn - fp * fn) / std::sqrt(den);
    }
  }
  raise(Errc::invalid_argument, "unknown metric kind");
}

double metric_from_csv(std::istream& in, MetricKind kind) {
  std::vector<int> labels, predictions;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b)) {
      std::ostringstream os;
      os << "line " << lineno << ": expected 'label,prediction'";
      raise(Errc::parse_error, os.str());
    }
    try {
      labels.push_back(std::stoi(a));
      predictions.push_back(std::stoi(b));
    } catch (const std::exception&) {
      if (lineno == 1) continue;  // header row
      std::ostringstream os;
      os << "line " << lineno << ": non-numeric entry '" << a << "," << b
         << "'";
      raise(Errc::parse_error, os.str());
    }
  }
  return metric_value(kind, confusion_counts(labels, predictions));
}

}  // namespace seedstop
