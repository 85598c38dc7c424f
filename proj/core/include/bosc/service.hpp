#ifndef BOSC_SERVICE_HPP
#define BOSC_SERVICE_HPP

#include <optional>
#include <string>

namespace bosc {

// Battery state of the device hosting a candidate service. All charge values
// are in mA*s.
struct DeviceState {
  double current_charge_mas = 0.0;
  double max_charge_mas = 0.0;
  double threshold_charge_mas = 0.0;
};

// One concrete invocable service. Durations in milliseconds, energy rate in
// mA. A service without a device is a software service and never contributes
// to a path's energy profile.
struct CandidateService {
  std::string id;
  int class_index = 0;  // 1-based index of the service class it realizes
  double execution_time_ms = 0.0;
  double network_latency_ms = 0.0;
  double cost = 0.0;
  double energy_rate_ma = 0.0;
  std::optional<DeviceState> device;

  bool battery_hosted() const { return device.has_value(); }
};

// Charge margin above the cutoff threshold; <= 0 means the device can no
// longer support its services.
inline double residual_energy(const DeviceState& device) {
  return device.current_charge_mas - device.threshold_charge_mas;
}

inline bool is_available(const CandidateService& service) {
  return !service.device || residual_energy(*service.device) > 0.0;
}

}  // namespace bosc

#endif  // BOSC_SERVICE_HPP
