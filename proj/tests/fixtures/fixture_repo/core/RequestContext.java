package fixture.core;

public class RequestContext {
    private final String user;

    public RequestContext(String user) {
        this.user = user;
    }

    public String user() {
        return user;
    }
}
