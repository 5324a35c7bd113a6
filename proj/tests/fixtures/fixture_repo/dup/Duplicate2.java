package fixture.dup;

import fixture.catalog.Money;

public class Dup {
    private Money price;
}
