import java.util.List;

public class LedgerRate {
    public void post(List<Account> accounts, List<Tx> txs, double rate) {
        for (Account acc : accounts) {
            for (Tx tx : txs) {
                acc.balance += tx.amount * rate;
                rate = rate * 2;
            }
        }
    }
}
