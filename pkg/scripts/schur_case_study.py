#!/usr/bin/env python3
"""End-to-end case study for the Schur supercharge in sl(4|2).

Prints the closed/exact dimensions, the conformal block patterns, the
kernel plane with its Hermitian orbit label, and the real fixed-locus
dimensions in all three signatures.
"""

from sconf import centralizer, realform


def main():
    pb = centralizer.projection_blocks()
    print(f"dim z = {pb['dim_z']}, dim b = {pb['dim_b']}")
    print(f"closed conformal block matches pattern: {pb['z_conf_equals_h_pattern']}")
    print(f"exact conformal block matches pattern:  {pb['b_conf_equals_k_pattern']}")
    print(
        "translations (closed, exact) = "
        f"({pb['dim_translations_closed']}, {pb['dim_translations_exact']})"
    )

    q = centralizer.schur_supercharge()
    point = realform.kernel_fiber(q)
    label = realform.hermitian_orbit_label(point)
    print(f"kernel plane dim {point.plane.dim}, orbit label {label}")

    for sig in ((4, 0), (3, 1), (2, 2)):
        rep = realform.schur_realform_report(sig)
        extra = ""
        if "translations_closed_real" in rep:
            extra = (
                f", real translations (closed, exact) = "
                f"({rep['translations_closed_real']}, {rep['translations_exact_real']})"
            )
        print(
            f"signature {sig} [{rep['involution']}]: "
            f"real dims (z, b) = ({rep['dim_z_real']}, {rep['dim_b_real']})" + extra
        )


if __name__ == "__main__":
    main()
