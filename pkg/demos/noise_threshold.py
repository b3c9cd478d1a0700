"""
How far can the gate error grow before the correction stops helping?

Sweeps the two-qubit depolarizing probability over a log grid with exact
outcome distributions (no shot noise), so every number is deterministic.
The corrected error stays inside chemical accuracy (1.6 mHa) well past the
calibrated device rate of p2 = 1.8e-2.
"""
from remvqe.experiments import DEVICE_P2, RunConfig, cmd_noise_sweep

CHEMICAL_ACCURACY = 1.6e-3


def main():
    res = cmd_noise_sweep(RunConfig(molecule="h2"))

    print(f"{'p2':>10} {'err raw':>10} {'err corrected':>14}")
    for p2, raw, rem in zip(res.p2_values, res.err_vqe, res.err_rem):
        tag = ""
        if rem > CHEMICAL_ACCURACY:
            tag = "  <- outside chemical accuracy"
        if abs(p2 - DEVICE_P2) < 0.3 * DEVICE_P2:
            tag += "  (~device rate)"
        print(f"{p2:10.5f} {raw:10.6f} {rem:14.6f}{tag}")

    inside = [p2 for p2, rem in zip(res.p2_values, res.err_rem) if rem <= CHEMICAL_ACCURACY]
    print(f"\ncorrected error within 1.6 mHa up to p2 = {max(inside):.3g}")


if __name__ == "__main__":
    main()
