"""Optional plotting helper: figures are saved only if matplotlib is installed."""
from pathlib import Path

OUT = Path(__file__).with_name("figures")


def figure():
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        return None
    return plt.subplots(figsize=(6, 4.5))


def save(fig, name):
    OUT.mkdir(exist_ok=True)
    fig.tight_layout()
    fig.savefig(OUT / name, dpi=110)
    print(f"saved {OUT / name}")
