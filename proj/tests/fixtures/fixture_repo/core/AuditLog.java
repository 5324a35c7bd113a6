package fixture.core;

public class AuditLog {
    private RequestContext context;

    public void attach(RequestContext current) {
        this.context = current;
    }

    public String describe(IAuditable subject) {
        String who = context == null ? "anonymous" : context.user();
        return who + ":" + subject.auditTag();
    }
}
