"""Sales and computer-repair shop management system.

Master data (customers, suppliers, technicians, catalog items), purchases,
sales and repair work orders are recorded as immutable events in an
append-only journal; every view of the shop (stock levels, documents,
reports) is a deterministic fold over that journal.
"""

__version__ = "0.1.0"
