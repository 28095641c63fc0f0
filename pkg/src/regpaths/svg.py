"""SVG drawing of a wiring diagram."""

import xml.etree.ElementTree as ET

PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf")


def render_svg(W, unit=40, margin=30, labels=False, stroke_width=2.5) -> str:
    """One polyline-shaped <path> per path.

    Column t spans x in [t, t+1]; a path that takes part in event t moves one
    height up or down across that column, every other path stays level.
    """
    snaps = W.snapshots
    m = len(snaps) - 1
    cols = m + 2  # a level lead-in and lead-out column
    width = cols * unit + 2 * margin
    height = (W.n - 1) * unit + 2 * margin + (unit if labels else 0)

    def px(t):
        return margin + t * unit

    def py(level):
        return margin + (W.n - level) * unit

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )
    pos = [{lab: i + 1 for i, lab in enumerate(s)} for s in snaps]
    for k, lab in enumerate(W.labels):
        pts = [(px(0), py(pos[0][lab]))]
        for t in range(m + 1):
            pts.append((px(t + 1), py(pos[t][lab])))
        pts.append((px(m + 2), py(pos[m][lab])))
        d = "M " + " L ".join(f"{x:g} {y:g}" for x, y in pts)
        ET.SubElement(
            svg,
            "path",
            d=d,
            fill="none",
            stroke=PALETTE[k % len(PALETTE)],
            **{"stroke-width": f"{stroke_width:g}", "data-label": str(lab)},
        )
        left = ET.SubElement(svg, "text", x=f"{px(0) - 8:g}", y=f"{py(pos[0][lab]) + 4:g}")
        left.set("text-anchor", "end")
        left.set("font-size", "12")
        left.text = str(lab)
    if labels:
        for t, s in enumerate(snaps):
            tx = ET.SubElement(svg, "text", x=f"{px(t + 1):g}", y=f"{height - margin / 2:g}")
            tx.set("text-anchor", "middle")
            tx.set("font-size", "9")
            tx.text = "".join(str(v) for v in s) if W.n < 10 else ",".join(map(str, s))
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"
