package fixture.catalog;

public class Tag {
    private final String value;

    public Tag(String value) {
        this.value = value;
    }

    public String value() {
        return value;
    }
}
