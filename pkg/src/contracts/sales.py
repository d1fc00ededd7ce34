"""Sales contract: buyer places orders, seller confirms and invoices them."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from src.contracts.base import Contract, ContractKind, abi
from src.contracts.errors import (
    AlreadyInitialized,
    BadState,
    DuplicateInvoice,
    DuplicateOrder,
    NoSuchInvoice,
    NoSuchOrder,
    NotBuyer,
    NotInitialized,
    NotSeller,
    SameParty,
    ZeroAmount,
)
from src.shared.address import Address


class OrderStatus(str, Enum):
    CREATED = "Created"
    CONFIRMED = "Confirmed"
    RECEIVED = "Received"
    CANCELLED = "Cancelled"


class InvoiceStatus(str, Enum):
    ISSUED = "Issued"
    CONFIRMED = "Confirmed"


@dataclass
class Order:
    order_id: str
    description: str
    status: OrderStatus = OrderStatus.CREATED


@dataclass
class Invoice:
    invoice_id: str
    order_id: str
    amount: int
    status: InvoiceStatus = InvoiceStatus.ISSUED


@dataclass
class SalesState:
    buyer: Address | None = None
    seller: Address | None = None
    initialized: bool = False
    orders: dict[str, Order] = field(default_factory=dict)
    invoices: dict[str, Invoice] = field(default_factory=dict)


# Order states from which each transition is allowed
_CANCELLABLE = frozenset({OrderStatus.CREATED, OrderStatus.CONFIRMED})
_INVOICEABLE = frozenset({OrderStatus.CONFIRMED, OrderStatus.RECEIVED})


class SalesContract(Contract):
    kind = ContractKind.SALES
    state: SalesState

    def initial_state(self) -> SalesState:
        return SalesState()

    def _require_buyer(self, caller: Address) -> None:
        if not self.state.initialized:
            raise NotInitialized("sales contract parties not set")
        if caller != self.state.buyer:
            raise NotBuyer(f"{caller} is not the buyer")

    def _require_seller(self, caller: Address) -> None:
        if not self.state.initialized:
            raise NotInitialized("sales contract parties not set")
        if caller != self.state.seller:
            raise NotSeller(f"{caller} is not the seller")

    def _order(self, order_id: str) -> Order:
        order = self.state.orders.get(order_id)
        if order is None:
            raise NoSuchOrder(order_id)
        return order

    @abi("setSalesContract", "address", "address")
    def set_sales_contract(self, caller: Address, buyer: Address, seller: Address) -> None:
        if self.state.initialized:
            raise AlreadyInitialized("sales contract parties already set")
        if buyer == seller:
            raise SameParty(f"buyer and seller are both {buyer}")
        self.state.buyer = buyer
        self.state.seller = seller
        self.state.initialized = True

    @abi("addOrder", "string", "string", payload=1)
    def add_order(self, caller: Address, order_id: str, description: str) -> None:
        self._require_buyer(caller)
        if order_id in self.state.orders:
            raise DuplicateOrder(order_id)
        self.state.orders[order_id] = Order(order_id=order_id, description=description)

    @abi("confirmOrder", "string")
    def confirm_order(self, caller: Address, order_id: str) -> None:
        self._require_seller(caller)
        order = self._order(order_id)
        if order.status is not OrderStatus.CREATED:
            raise BadState(f"order {order_id} is {order.status.value}")
        order.status = OrderStatus.CONFIRMED

    @abi("cancelOrder", "string")
    def cancel_order(self, caller: Address, order_id: str) -> None:
        self._require_buyer(caller)
        order = self._order(order_id)
        if order.status not in _CANCELLABLE:
            raise BadState(f"order {order_id} is {order.status.value}")
        order.status = OrderStatus.CANCELLED

    @abi("receiveOrder", "string")
    def receive_order(self, caller: Address, order_id: str) -> None:
        self._require_buyer(caller)
        order = self._order(order_id)
        if order.status is not OrderStatus.CONFIRMED:
            raise BadState(f"order {order_id} is {order.status.value}")
        order.status = OrderStatus.RECEIVED

    @abi("orderExists", "string", view=True)
    def order_exists(self, caller: Address, order_id: str) -> bool:
        return order_id in self.state.orders

    @abi("createInvoice", "string", "string", "int")
    def create_invoice(self, caller: Address, invoice_id: str, order_id: str, amount: int) -> None:
        self._require_seller(caller)
        order = self._order(order_id)
        if order.status not in _INVOICEABLE:
            raise BadState(f"order {order_id} is {order.status.value}")
        if invoice_id in self.state.invoices:
            raise DuplicateInvoice(invoice_id)
        if amount <= 0:
            raise ZeroAmount(f"invoice amount {amount}")
        self.state.invoices[invoice_id] = Invoice(invoice_id=invoice_id, order_id=order_id, amount=amount)

    @abi("confirmInvoice", "string")
    def confirm_invoice(self, caller: Address, invoice_id: str) -> None:
        self._require_buyer(caller)
        invoice = self.state.invoices.get(invoice_id)
        if invoice is None:
            raise NoSuchInvoice(invoice_id)
        if invoice.status is not InvoiceStatus.ISSUED:
            raise BadState(f"invoice {invoice_id} is {invoice.status.value}")
        invoice.status = InvoiceStatus.CONFIRMED
